use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::checks::run_check;
use crate::manifest::Manifest;
use crate::suites::DEFAULT_SEED;

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            jobs: None,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub pass: bool,
    pub computed: Value,
    pub expected: Value,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// Records appear in manifest order whatever the schedule was.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Drops timings so that equal inputs give byte-identical output.
    pub fn stable(mut self) -> Report {
        for c in &mut self.checks {
            c.elapsed_ms = None;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let time = c.elapsed_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
            if c.pass {
                out.push_str(&format!("PASS {}{time}\n", c.id));
            } else {
                out.push_str(&format!(
                    "FAIL {}{time}\n  computed: {}\n  expected: {}\n",
                    c.id, c.computed, c.expected
                ));
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.summary.pass, self.summary.fail));
        out
    }
}

pub fn run_manifest(manifest: &Manifest, cfg: &RunConfig) -> Report {
    let run = || {
        manifest
            .checks
            .par_iter()
            .map(|check| {
                let start = Instant::now();
                let outcome = run_check(check, cfg.seed);
                CheckRecord {
                    id: check.id.clone(),
                    pass: outcome.pass,
                    computed: outcome.computed,
                    expected: check.expected.clone(),
                    provenance: check.provenance.clone(),
                    elapsed_ms: Some(start.elapsed().as_millis() as u64),
                }
            })
            .collect::<Vec<_>>()
    };
    let checks = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let pass = checks.iter().filter(|c| c.pass).count();
    Report {
        summary: Summary {
            pass,
            fail: checks.len() - pass,
        },
        checks,
    }
}
