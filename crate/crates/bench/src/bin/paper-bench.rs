use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use igr_core::ktheory::named::collection_by_name;
use igr_core::ktheory::{gram_matrix, k_span_membership, ProbeSet, SpanCertificate};
use igr_core::schur::{tensor_gl, tensor_mixed};
use igr_core::{
    cohomology_expr, ext_groups, pushforward_ifl, pushforward_rel_gr, BundleExpr, Context,
    GLWeight, PushforwardResult,
};
use paper_bench::checks::integer_json;
use paper_bench::manifest::BUNDLED_NAME;
use paper_bench::registry::coverage_gaps;
use paper_bench::suites::DEFAULT_SEED;
use paper_bench::{kexpr, notation, run_manifest, Manifest, RunConfig};
use serde_json::json;

#[derive(Parser)]
#[command(name = "paper-bench", version, about = "Exact cohomology and K-theory on isotropic Grassmannians")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for manifest checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Omit timings from reports so reruns are byte-identical.
    #[arg(long, global = true)]
    stable: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct SpaceArgs {
    /// `igr` for IGr(k, dim) or `gr` for Gr(k, dim).
    #[arg(long, default_value = "igr")]
    space: String,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 8)]
    dim: usize,
}

impl SpaceArgs {
    fn context(&self) -> Result<Context, String> {
        let ctx = match self.space.to_ascii_lowercase().as_str() {
            "igr" => Context::isotropic(self.k, self.dim),
            "gr" => Context::classical(self.k, self.dim),
            other => return Err(format!("unknown space `{other}`; use igr or gr")),
        };
        ctx.map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Sheaf cohomology of a bundle expression.
    Bbw {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        expr: String,
    },
    /// Ext groups between two bundle expressions.
    Ext {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Tensor product decomposition of Schur functors.
    Lr {
        /// Left factor applied to U, i.e. dualized.
        #[arg(long, conflicts_with = "left", allow_hyphen_values = true)]
        left_dual: Option<String>,
        /// Left factor applied to U^v.
        #[arg(long, allow_hyphen_values = true)]
        left: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Pushforward along the flag fibration, or along a relative Gr(l, ·).
    Push {
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Weight on the relative Grassmannian, with `--l`.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Gram matrix of a named collection.
    Gram {
        #[arg(long)]
        collection: String,
    },
    /// Evaluate a K-class expression.
    Kclass {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Integer span membership with a coefficient certificate.
    Span {
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Generator or block such as `E(1)`; repeat for more.
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// Run a verification manifest.
    VerifyPaper {
        /// Manifest path; `paper-full.json` falls back to the bundled copy.
        #[arg(long, default_value = BUNDLED_NAME)]
        manifest: PathBuf,
        /// Also fail if the manifest misses a registered check id.
        #[arg(long)]
        coverage: bool,
    },
}

/// What a subcommand asks `main` to do on success.
enum Done {
    Ok,
    Failed,
}

fn parse_weight(s: &str) -> Result<GLWeight, String> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad weight `{s}`")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GLWeight::new(v))
}

fn print_json(v: &serde_json::Value) {
    print_serialized(v);
}

fn print_serialized<T: serde::Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("json"));
}

fn run(cli: &Cli) -> Result<Done, String> {
    let err = |e: igr_core::EngineError| e.to_string();
    match &cli.cmd {
        Cmd::Bbw { space, expr } => {
            let ctx = space.context()?;
            let e = BundleExpr::parse(ctx, expr).map_err(err)?;
            let h = cohomology_expr(&e).map_err(err)?;
            if cli.json {
                print_serialized(&notation::EntryList {
                    ext: None,
                    cohomology: Some(notation::entries(&h)),
                });
            } else {
                println!("{h}");
            }
        }
        Cmd::Ext { space, from, to } => {
            let ctx = space.context()?;
            let e = BundleExpr::parse(ctx, from).map_err(err)?;
            let f = BundleExpr::parse(ctx, to).map_err(err)?;
            let h = ext_groups(&e, &f).map_err(err)?;
            if cli.json {
                print_serialized(&notation::EntryList {
                    ext: Some(notation::entries(&h)),
                    cohomology: None,
                });
            } else {
                println!("{}", notation::render(&h));
            }
        }
        Cmd::Lr {
            left_dual,
            left,
            right,
        } => {
            let b = parse_weight(right)?;
            let d = match (left_dual, left) {
                (Some(a), None) => tensor_mixed(&parse_weight(a)?, &b),
                (None, Some(a)) => tensor_gl(&parse_weight(a)?, &b),
                _ => return Err("give exactly one of --left-dual or --left".into()),
            }
            .map_err(err)?;
            if cli.json {
                let terms: Vec<_> = d
                    .iter()
                    .map(|(w, m)| json!({ "weight": w.entries(), "mult": m }))
                    .collect();
                print_json(&json!({ "terms": terms }));
            } else {
                let items: Vec<String> = d
                    .iter()
                    .map(|(w, m)| {
                        let body: Vec<String> = w.entries().iter().map(|x| x.to_string()).collect();
                        format!("({}):{m}", body.join(","))
                    })
                    .collect();
                println!("{{{}}}", items.join(","));
            }
        }
        Cmd::Push { i, j, k, weight, l } => {
            let r = match (i, j, k, weight, l) {
                (Some(i), Some(j), Some(k), None, None) => pushforward_ifl(*j, *k, *i),
                (None, None, None, Some(w), Some(l)) => pushforward_rel_gr(&parse_weight(w)?, *l),
                _ => return Err("give either --i --j --k or --weight --l".into()),
            }
            .map_err(err)?;
            if cli.json {
                let v = match &r {
                    PushforwardResult::Zero => json!({ "zero": true }),
                    PushforwardResult::Term { weight, shift } => {
                        json!({ "zero": false, "weight": weight.entries(), "shift": shift })
                    }
                };
                print_json(&v);
            } else {
                println!("{}", notation::render_pushforward(&r));
            }
        }
        Cmd::Gram { collection } => {
            let c = collection_by_name(collection).map_err(err)?;
            let g = gram_matrix(&c.classes).map_err(err)?;
            let det = g.determinant();
            if cli.json {
                print_json(&json!({
                    "order": g.order,
                    "matrix": g.entries,
                    "unitriangular": g.is_unitriangular(),
                    "det": integer_json(&det.to_string()),
                }));
            } else {
                for (label, row) in g.order.iter().zip(&g.entries) {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
                    println!("{}  {label}", cells.join(""));
                }
                println!("unitriangular: {}, det: {det}", g.is_unitriangular());
            }
        }
        Cmd::Kclass { expr } => {
            let c = kexpr::parse(expr)?;
            let rank = c.rank().map_err(err)?;
            if cli.json {
                print_json(&json!({ "expr": c.expr.to_string(), "rank": rank }));
            } else {
                println!("{} = {}\nrank {rank}", c.label, c.expr);
            }
        }
        Cmd::Span { target, gens } => {
            let t = kexpr::parse(target)?;
            let mut classes = vec![];
            for g in gens {
                classes.extend(kexpr::parse_generator(g)?);
            }
            let probes = ProbeSet::reference().map_err(err)?;
            let cert = k_span_membership(&t, &classes, probes).map_err(err)?;
            match (&cert, cli.json) {
                (SpanCertificate::Coefficients(c), true) => {
                    print_json(&json!({ "member": true, "coefficients": c }))
                }
                (SpanCertificate::NotInSpan, true) => print_json(&json!({ "member": false })),
                (SpanCertificate::Coefficients(c), false) => {
                    println!("member");
                    for (g, k) in classes.iter().zip(c).filter(|(_, k)| **k != 0) {
                        println!("  {k:>4} * {}", g.label);
                    }
                }
                (SpanCertificate::NotInSpan, false) => println!("not in span"),
            }
        }
        Cmd::VerifyPaper { manifest, coverage } => {
            let m = Manifest::load(manifest).map_err(|e| e.to_string())?;
            let cfg = RunConfig {
                jobs: cli.jobs,
                seed: cli.seed,
            };
            let mut report = run_manifest(&m, &cfg);
            if cli.stable {
                report = report.stable();
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            let gaps = if *coverage { coverage_gaps(&m) } else { vec![] };
            if !gaps.is_empty() {
                eprintln!("missing checks: {}", gaps.join(", "));
            }
            if report.exit_code() != 0 || !gaps.is_empty() {
                return Ok(Done::Failed);
            }
        }
    }
    Ok(Done::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Done::Ok) => ExitCode::SUCCESS,
        Ok(Done::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
