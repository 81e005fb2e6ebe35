//! Small hand-checked instances for each stage of the heuristic.

use longpath::{
    bfs_distances, create, exact_from_pair, exact_longest_path, generate, improve, search, solve,
    solve_all_pairs, solve_farthest, validate_path, Family, Graph, OracleLimits, Path,
    SolveConfig, TieBreakPolicy,
};

fn gen(f: Family) -> Graph {
    generate(&f, 0).unwrap()
}

fn two_triangles() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

#[test]
fn triangle_weights_match_distance_characterization() {
    let g = gen(Family::Complete { n: 3 });
    let d = bfs_distances(&g, 0).unwrap();
    assert_eq!(d.raw(), &[0, 1, 1]);
    let wg = create(&g, 0).unwrap();
    for (u, v, w) in wg.edges() {
        assert_eq!(w, d.raw()[u].min(d.raw()[v]) + 1);
    }
    assert_eq!(
        wg.edges().collect::<Vec<_>>(),
        vec![(0, 1, 1), (0, 2, 1), (1, 2, 2)]
    );
}

#[test]
fn triangle_search_matches_oracle() {
    let g = gen(Family::Complete { n: 3 });
    let out = search(&create(&g, 0).unwrap(), 1, TieBreakPolicy::FirstSeen).unwrap();
    assert_eq!(out.best_path.vertices(), &[1, 2, 0]);
    let exact = exact_longest_path(&g, &OracleLimits::default()).unwrap();
    assert_eq!(out.best_length, exact.length());
}

#[test]
fn dodecahedron_hamiltonian_between_adjacent_vertices() {
    // With root 6 and start at its neighbor 2, the walk covers all twenty
    // vertices and ends at the root, so edge (2, 6) closes a Hamiltonian
    // cycle.
    let g = gen(Family::Dodecahedron);
    let wg = create(&g, 6).unwrap();
    let out = search(&wg, 2, TieBreakPolicy::FirstSeen).unwrap();
    assert_eq!(out.best_length, 19);
    validate_path(&g, &out.best_path).unwrap();
    assert_eq!(out.best_path.first(), Some(2));
    assert_eq!(out.best_path.last(), Some(6));
    assert!(g.has_edge(2, 6));
}

#[test]
fn dodecahedron_all_pairs_and_farthest() {
    let g = gen(Family::Dodecahedron);
    let all = solve_all_pairs(&g, &SolveConfig::default()).unwrap();
    assert_eq!(all.length, 19);
    let far = solve_farthest(&g, &SolveConfig::default()).unwrap();
    assert!(far.length <= all.length);
    validate_path(&g, &far.best).unwrap();
}

#[test]
fn complete_four_matches_oracle() {
    let g = gen(Family::Complete { n: 4 });
    assert_eq!(exact_longest_path(&g, &OracleLimits::default()).unwrap().length(), 3);
    assert_eq!(solve_all_pairs(&g, &SolveConfig::default()).unwrap().length, 3);
}

#[test]
fn disjoint_triangles_stay_within_a_component() {
    let g = two_triangles();
    assert_eq!(exact_longest_path(&g, &OracleLimits::default()).unwrap().length(), 2);
    let r = solve_all_pairs(&g, &SolveConfig::default()).unwrap();
    assert_eq!(r.length, 2);
    assert_eq!(r.best.vertices(), &[1, 2, 0]);
}

#[test]
fn cycle_eight_farthest() {
    let g = gen(Family::Cycle { n: 8 });
    assert_eq!(exact_longest_path(&g, &OracleLimits::default()).unwrap().length(), 7);
    let r = solve_farthest(&g, &SolveConfig::default()).unwrap();
    assert_eq!(r.length, 7);
    // the farthest vertex from root 0 on C_8 is 4
    assert_eq!((r.root, r.start), (0, 4));
}

#[test]
fn path_six_farthest_starts_at_endpoints() {
    let g = gen(Family::Path { n: 6 });
    for root in 0..6 {
        let (far, _) = bfs_distances(&g, root).unwrap().farthest();
        assert!(far == 0 || far == 5);
    }
    assert_eq!(solve_farthest(&g, &SolveConfig::default()).unwrap().length, 5);
}

#[test]
fn improvement_examples() {
    let g = gen(Family::Complete { n: 3 });
    assert_eq!(improve(&g, &Path::new(vec![0, 2])).unwrap().vertices(), &[0, 1, 2]);

    let g = gen(Family::Dodecahedron);
    let ham = solve(&g, &SolveConfig::default()).unwrap().best;
    assert_eq!(improve(&g, &ham).unwrap(), ham);

    let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
    let p = improve(&g, &Path::new(vec![1, 0, 3])).unwrap();
    assert_eq!(p.length(), 3);
    assert_eq!(exact_longest_path(&g, &OracleLimits::default()).unwrap().length(), 3);
}

#[test]
fn pair_oracle_examples() {
    let limits = OracleLimits::default();
    let p3 = gen(Family::Path { n: 3 });
    assert_eq!(
        exact_from_pair(&p3, 0, 2, &limits).unwrap(),
        Some(Path::new(vec![0, 1, 2]))
    );
    assert_eq!(exact_from_pair(&two_triangles(), 0, 3, &limits).unwrap(), None);
    let c4 = gen(Family::Cycle { n: 4 });
    let p = exact_from_pair(&c4, 0, 1, &limits).unwrap().unwrap();
    assert_eq!(p.length(), 3);
}

#[test]
fn structured_families_are_solved_exactly() {
    for n in [4, 8, 16, 32] {
        for f in [Family::Path { n }, Family::Cycle { n }, Family::Complete { n }] {
            let r = solve(&gen(f.clone()), &SolveConfig::default()).unwrap();
            assert_eq!(r.length, n - 1, "{f}");
        }
    }
    for a in [3, 5] {
        let g = gen(Family::CompleteBipartite { a, b: a });
        assert_eq!(solve(&g, &SolveConfig::default()).unwrap().length, 2 * a - 1);
    }
}
