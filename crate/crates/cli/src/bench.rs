//! Benchmark harness: runs suites of generated instances through the
//! drivers and emits one CSV row per (instance, variant, policy).

use std::io::Write;
use std::time::Instant;

use longpath::{
    exact_longest_path, generate, improve, solve, validate_path, Family, Graph, OracleLimits,
    SolveConfig, TieBreakPolicy, Variant,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Instances up to this size get an exact reference length by default.
pub const DEFAULT_ORACLE_MAX_N: usize = 14;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("suite: {0}")]
    Suite(String),
    #[error("{instance}: {source}")]
    Solve {
        instance: String,
        #[source]
        source: longpath::Error,
    },
    #[error("{instance}: record invariant violated: {detail}")]
    Invariant { instance: String, detail: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One CSV row. Field order is the column order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub variant: String,
    pub policy: String,
    pub seed: u64,
    pub found_length: usize,
    pub improved_length: usize,
    pub oracle_length: Option<usize>,
    pub wall_time_ms: f64,
}

pub const CSV_HEADER: &str =
    "instance,n,m,variant,policy,seed,found_length,improved_length,oracle_length,wall_time_ms";

impl BenchRecord {
    fn check(&self) -> Result<(), BenchError> {
        let fail = |detail: String| {
            Err(BenchError::Invariant {
                instance: self.instance.clone(),
                detail,
            })
        };
        if self.found_length > self.improved_length {
            return fail(format!(
                "found {} > improved {}",
                self.found_length, self.improved_length
            ));
        }
        if let Some(oracle) = self.oracle_length {
            if self.improved_length > oracle {
                return fail(format!(
                    "improved {} > oracle {oracle}",
                    self.improved_length
                ));
            }
        }
        if !(self.wall_time_ms >= 0.0) {
            return fail(format!("wall time {}", self.wall_time_ms));
        }
        Ok(())
    }
}

/// One suite entry, expanded over seeds, variants, and policies.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    /// Family and parameters as on the `gen` command line, e.g. `"gnp 12 0.3"`.
    pub family: String,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default = "default_variants")]
    pub variants: Vec<String>,
    #[serde(default = "default_policies")]
    pub policies: Vec<String>,
    /// Compute the exact length. Defaults to `n <= DEFAULT_ORACLE_MAX_N`.
    pub oracle: Option<bool>,
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

fn default_variants() -> Vec<String> {
    vec!["all-pairs".into(), "farthest".into()]
}

fn default_policies() -> Vec<String> {
    vec!["first".into()]
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    #[serde(rename = "instance")]
    pub instances: Vec<InstanceSpec>,
}

struct Prepared {
    family: Family,
    seeds: Vec<u64>,
    variants: Vec<Variant>,
    policies: Vec<String>,
    oracle: Option<bool>,
}

impl Suite {
    /// Parses a TOML suite file made of `[[instance]]` tables.
    pub fn from_toml(text: &str) -> Result<Self, BenchError> {
        let suite: Suite = toml::from_str(text).map_err(|e| BenchError::Suite(e.to_string()))?;
        suite.prepare()?;
        Ok(suite)
    }

    pub fn builtin(name: &str) -> Option<Self> {
        let text = match name {
            "smoke" => SMOKE,
            "scaling" => SCALING,
            "full" => return Some(Suite {
                instances: [SMOKE, SCALING]
                    .iter()
                    .flat_map(|t| Suite::from_toml(t).expect("built-in suite").instances)
                    .collect(),
            }),
            _ => return None,
        };
        Some(Suite::from_toml(text).expect("built-in suite"))
    }

    fn prepare(&self) -> Result<Vec<Prepared>, BenchError> {
        if self.instances.is_empty() {
            return Err(BenchError::Suite("no instances".into()));
        }
        self.instances
            .iter()
            .map(|spec| {
                let family: Family = spec
                    .family
                    .parse()
                    .map_err(|e: longpath::Error| BenchError::Suite(e.to_string()))?;
                let variants = spec
                    .variants
                    .iter()
                    .map(|v| v.parse())
                    .collect::<Result<Vec<Variant>, _>>()
                    .map_err(|e| BenchError::Suite(e.to_string()))?;
                for p in &spec.policies {
                    TieBreakPolicy::from_name(p, 0).map_err(|e| BenchError::Suite(e.to_string()))?;
                }
                if spec.seeds.is_empty() || variants.is_empty() || spec.policies.is_empty() {
                    return Err(BenchError::Suite(format!(
                        "{}: seeds, variants and policies must be non-empty",
                        spec.family
                    )));
                }
                Ok(Prepared {
                    family,
                    seeds: spec.seeds.clone(),
                    variants,
                    policies: spec.policies.clone(),
                    oracle: spec.oracle,
                })
            })
            .collect()
    }
}

/// Three small structured graphs, the dodecahedron under every policy, and
/// a handful of random instances, all with exact reference lengths.
pub const SMOKE: &str = r#"
[[instance]]
family = "dodecahedron"
policies = ["first", "lowest", "random"]

[[instance]]
family = "path 8"

[[instance]]
family = "cycle 8"

[[instance]]
family = "complete 6"

[[instance]]
family = "complete_bipartite 3 3"

[[instance]]
family = "grid 3 4"

[[instance]]
family = "gnp 12 0.3"
seeds = [1, 2, 3]
policies = ["first", "random"]

[[instance]]
family = "random_tree 14"
seeds = [1, 2]
"#;

/// G(n, 0.1) at three sizes, for timing how each driver scales with n.
pub const SCALING: &str = r#"
[[instance]]
family = "gnp 100 0.1"
seeds = [1]
oracle = false

[[instance]]
family = "gnp 200 0.1"
seeds = [1]
oracle = false

[[instance]]
family = "gnp 400 0.1"
seeds = [1]
oracle = false
"#;

fn instance_label(family: &Family) -> String {
    family.to_string().replace(' ', "-")
}

fn solve_err(instance: &str) -> impl Fn(longpath::Error) -> BenchError + '_ {
    move |source| BenchError::Solve {
        instance: instance.to_string(),
        source,
    }
}

/// Runs every row of `suite` in suite order, handing each finished record to
/// `sink` before starting the next.
pub fn run_suite<F>(suite: &Suite, mut sink: F) -> Result<Vec<BenchRecord>, BenchError>
where
    F: FnMut(&BenchRecord) -> Result<(), BenchError>,
{
    let mut records = Vec::new();
    for prepared in suite.prepare()? {
        let instance = instance_label(&prepared.family);
        for &seed in &prepared.seeds {
            let g = generate(&prepared.family, seed).map_err(solve_err(&instance))?;
            let oracle_length = oracle_length(&g, prepared.oracle).map_err(solve_err(&instance))?;
            for &variant in &prepared.variants {
                for policy_name in &prepared.policies {
                    let policy = TieBreakPolicy::from_name(policy_name, seed)
                        .map_err(solve_err(&instance))?;
                    let record =
                        run_row(&g, &instance, seed, variant, policy, oracle_length)?;
                    sink(&record)?;
                    records.push(record);
                }
            }
        }
    }
    Ok(records)
}

fn oracle_length(g: &Graph, enabled: Option<bool>) -> longpath::Result<Option<usize>> {
    if !enabled.unwrap_or(g.n() <= DEFAULT_ORACLE_MAX_N) {
        return Ok(None);
    }
    let limits = OracleLimits {
        max_vertices: g.n().max(OracleLimits::default().max_vertices),
        ..Default::default()
    };
    exact_longest_path(g, &limits).map(|p| Some(p.length()))
}

fn run_row(
    g: &Graph,
    instance: &str,
    seed: u64,
    variant: Variant,
    policy: TieBreakPolicy,
    oracle_length: Option<usize>,
) -> Result<BenchRecord, BenchError> {
    let cfg = SolveConfig {
        variant,
        policy,
        ..Default::default()
    };
    let began = Instant::now();
    let result = solve(g, &cfg).map_err(solve_err(instance))?;
    let wall_time_ms = began.elapsed().as_secs_f64() * 1e3;

    validate_path(g, &result.best).map_err(|v| BenchError::Invariant {
        instance: instance.to_string(),
        detail: v.to_string(),
    })?;
    let improved = improve(g, &result.best).map_err(solve_err(instance))?;
    let record = BenchRecord {
        instance: instance.to_string(),
        n: g.n(),
        m: g.m(),
        variant: variant.name().to_string(),
        policy: policy.name().to_string(),
        seed,
        found_length: result.length,
        improved_length: improved.length(),
        oracle_length,
        wall_time_ms,
    };
    record.check()?;
    Ok(record)
}

/// Runs `suite`, streaming rows to `out` as CSV with a header.
pub fn write_suite_csv<W: Write>(suite: &Suite, out: W) -> Result<Vec<BenchRecord>, BenchError> {
    let mut writer = csv::Writer::from_writer(out);
    let records = run_suite(suite, |r| {
        writer.serialize(r)?;
        writer.flush()?;
        Ok(())
    })?;
    writer.flush()?;
    Ok(records)
}

/// Least-squares slope of `ln(time)` against `ln(n)`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}
