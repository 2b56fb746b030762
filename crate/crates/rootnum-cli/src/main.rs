use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rootnum::catalog::{catalog_family, parse_family_file, parse_params, FamilySpec, CATALOG};
use rootnum::intarith::{cache_entries, cache_insert, Factorization};
use rootnum::report::{self, Format, Paths, Report};
use rootnum::sieves::{self, ArithProgression};
use rootnum::surface::{mu_membership, Surface};
use rootnum::variation::{applicability, variation_pair_search, DEFAULT_BOUND};
use rootnum::{Error, IntPoly};

#[derive(Parser)]
#[command(
    name = "rootnum",
    version,
    about = "Root numbers of integer fibers of elliptic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathsArg {
    Direct,
    Formula,
    Both,
}

#[derive(Args)]
struct Family {
    /// Built-in family name
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
    /// Family specification file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family parameter, k=v (repeatable)
    #[arg(long = "param", allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Args)]
struct PolyArgs {
    /// Polynomial as ascending coefficients, e.g. "1 0 1" for T^2 + 1
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Arithmetic progression a:N
    #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
    progression: String,
    /// Census bound; rows are printed at X/4, X/2 and X
    #[arg(long = "X", default_value_t = 100_000)]
    x: i64,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the bad places of a family
    Classify {
        #[command(flatten)]
        family: Family,
    },
    /// Root numbers over a range of t
    Root {
        #[command(flatten)]
        family: Family,
        /// Range a..b (inclusive)
        #[arg(long = "t", default_value = "-50..50", allow_hyphen_values = true)]
        range: String,
        #[arg(long, value_enum, default_value_t = PathsArg::Both)]
        paths: PathsArg,
    },
    /// Truncated average of W over |t| <= T
    Average {
        #[command(flatten)]
        family: Family,
        /// Bound on |t|; ten partial means are reported along the way
        #[arg(long = "T", default_value_t = 1000)]
        t_max: i64,
    },
    /// Find t with W = +1 and t with W = -1
    Vary {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Squarefree census against the truncated density constant; with
    /// --g, the combined squarefree and Liouville census
    SieveDensity {
        #[command(flatten)]
        poly: PolyArgs,
        /// Second polynomial for the combined census
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        /// Liouville target for the combined census
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
        /// Largest prime in the truncated Euler product
        #[arg(long, default_value_t = 10_000)]
        cutoff: u64,
    },
    /// Liouville sums of polynomial values
    Chowla {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// List the built-in families, or print one as a specification file
    Catalog {
        #[command(flatten)]
        family: Family,
    },
}

struct Failure(String, u8);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(msg.into(), 2)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string(), 1)
    }
}

fn load_family(f: &Family) -> Result<FamilySpec, Failure> {
    let params = parse_params(&f.params).map_err(|e| usage(e.to_string()))?;
    match (&f.catalog, &f.file) {
        (Some(name), None) => catalog_family(name, &params).map_err(|e| usage(e.to_string())),
        (None, Some(path)) => {
            if !params.is_empty() {
                return Err(usage("--param applies to --catalog only"));
            }
            let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display()), 1))?;
            Ok(parse_family_file(&text)?)
        }
        _ => Err(usage("exactly one of --catalog or --file is required")),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || usage(format!("bad range {s:?}; expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(usage(format!("empty range {s}")));
    }
    Ok((a, b))
}

fn parse_poly(s: &str) -> Result<IntPoly, Failure> {
    let cs: Result<Vec<BigInt>, _> = s
        .split([' ', ','])
        .filter(|x| !x.is_empty())
        .map(|x| x.parse())
        .collect();
    let cs = cs.map_err(|_| usage(format!("bad polynomial {s:?}")))?;
    let p = IntPoly::from_bigints(&cs);
    if p.is_zero() {
        return Err(usage("zero polynomial"));
    }
    Ok(p)
}

fn parse_progression(s: &str) -> Result<ArithProgression, Failure> {
    let bad = || usage(format!("bad progression {s:?}; expected a:N"));
    let (a, n) = s.split_once(':').ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let n: i64 = n.trim().parse().map_err(|_| bad())?;
    ArithProgression::new(a, n).map_err(|e| usage(e.to_string()))
}

fn classify_text(spec: &FamilySpec, s: &Surface) -> Result<String, Failure> {
    let mut out = String::new();
    writeln!(out, "family  {}", spec.label()).unwrap();
    writeln!(out, "delta   {}", s.delta).unwrap();
    writeln!(out, "euler   {}", s.euler_sum()).unwrap();
    if s.is_isotrivial {
        writeln!(out, "isotrivial").unwrap();
    }
    let w = s.places.iter().map(|p| p.label().len()).max().unwrap_or(0).max(12);
    writeln!(out, "{:<w$} {:<6} {:>4}  {:<8} mu", "place", "type", "eps", "insipid").unwrap();
    for p in &s.places {
        let mu = match (p.poly(), p.kodaira.mu_order()) {
            (Some(poly), Some(d)) => format!("mu{d}={}", mu_membership(poly, d)?),
            _ => "-".into(),
        };
        let eps = p.epsilon.map(|e| e.to_string()).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<w$} {:<6} {:>4}  {:<8} {mu}",
            p.label(),
            p.kodaira.to_string(),
            eps,
            p.insipid
        )
        .unwrap();
    }
    let app = applicability(s);
    let witness = app.witness_place.map(|p| p.label()).unwrap_or_else(|| "-".into());
    writeln!(out, "variation  {} ({}, witness {witness})", app.status, app.branch).unwrap();
    Ok(out)
}

fn classify_json(spec: &FamilySpec, s: &Surface) -> Result<String, Failure> {
    let mut places = Vec::new();
    for p in &s.places {
        let mu = match (p.poly(), p.kodaira.mu_order()) {
            (Some(poly), Some(d)) => Some(mu_membership(poly, d)?),
            _ => None,
        };
        places.push(serde_json::json!({
            "place": p.label(),
            "kodaira": p.kodaira.to_string(),
            "epsilon": p.epsilon,
            "insipid": p.insipid,
            "mu": mu,
        }));
    }
    let app = applicability(s);
    let v = serde_json::json!({
        "family": spec.label(),
        "delta": s.delta.to_string(),
        "euler": s.euler_sum(),
        "isotrivial": s.is_isotrivial,
        "places": places,
        "variation": {
            "status": app.status.to_string(),
            "branch": app.branch.to_string(),
            "witness": app.witness_place.map(|p| p.label()),
            "conditional_on": app.conditional_on,
        },
    });
    Ok(serde_json::to_string_pretty(&v).unwrap() + "\n")
}

/// Output text and whether the run counts as a success.
fn dispatch(cli: &Cli) -> Result<(Vec<u8>, bool), Failure> {
    let format = match cli.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    match &cli.verb {
        Verb::Classify { family } => {
            let spec = load_family(family)?;
            let s = spec.surface()?;
            let text = match format {
                Format::Csv => classify_text(&spec, &s)?,
                Format::Json => classify_json(&spec, &s)?,
            };
            Ok((text.into_bytes(), true))
        }
        Verb::Root { family, range, paths } => {
            let s = load_family(family)?.surface()?;
            let (lo, hi) = parse_range(range)?;
            let paths = match paths {
                PathsArg::Direct => Paths::Direct,
                PathsArg::Formula => Paths::Formula,
                PathsArg::Both => Paths::Both,
            };
            let rows = report::scan(&s, lo, hi, paths)?;
            let ok = rows.iter().all(|r| r.agree() != Some(false));
            Ok((report::write_report(&Report::Scan(&rows), format), ok))
        }
        Verb::Average { family, t_max } => {
            let s = load_family(family)?.surface()?;
            let a = report::average(&s, *t_max, 10)?;
            let text = match format {
                Format::Csv => {
                    let mut out = String::from("T,mean\n");
                    for (t, m) in &a.partial {
                        writeln!(out, "{t},{m:.6}").unwrap();
                    }
                    writeln!(
                        out,
                        "# mean {:.6} over {} fibers, {} singular skipped",
                        a.mean, a.count, a.skipped
                    )
                    .unwrap();
                    out
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "T": a.bound,
                        "mean": a.mean,
                        "sum": a.sum,
                        "count": a.count,
                        "skipped": a.skipped,
                        "partial": a.partial,
                    });
                    serde_json::to_string_pretty(&v).unwrap() + "\n"
                }
            };
            Ok((text.into_bytes(), true))
        }
        Verb::Vary { family, bound } => {
            let s = load_family(family)?.surface()?;
            let cert = variation_pair_search(&s, *bound)?;
            let out = match format {
                Format::Csv => cert.to_string().into_bytes(),
                Format::Json => report::write_report(&Report::Certificate(&cert), Format::Json),
            };
            Ok((out, cert.verify(&s)?))
        }
        Verb::SieveDensity {
            poly,
            g,
            epsilon,
            cutoff,
        } => {
            let f = parse_poly(&poly.poly)?;
            let prog = parse_progression(&poly.progression)?;
            let xs = [poly.x / 4, poly.x / 2, poly.x];
            let mut rows = Vec::new();
            match g {
                None => {
                    let c = sieves::rational_to_f64(&sieves::density_constant(&f, &prog, *cutoff)?);
                    for x in xs {
                        let mut r = sieves::squarefree_census(&f, &prog, x)?;
                        r.constant = Some(c);
                        rows.push(r);
                    }
                }
                Some(g) => {
                    let g = parse_poly(g)?;
                    for x in xs {
                        rows.push(sieves::combined_census(&f, &g, &[], &prog, *epsilon, x, *cutoff)?);
                    }
                }
            }
            Ok((report::write_report(&Report::Census(&rows), format), true))
        }
        Verb::Chowla { poly } => {
            let f = parse_poly(&poly.poly)?;
            let prog = parse_progression(&poly.progression)?;
            let rows: Result<Vec<_>, _> = [poly.x / 4, poly.x / 2, poly.x]
                .iter()
                .map(|&x| sieves::liouville_census(&f, &prog, x))
                .collect();
            Ok((report::write_report(&Report::Chowla(&rows?), format), true))
        }
        Verb::Catalog { family } => {
            if family.catalog.is_none() && family.file.is_none() {
                let mut out = String::new();
                for name in CATALOG {
                    writeln!(out, "{name}").unwrap();
                }
                return Ok((out.into_bytes(), true));
            }
            Ok((load_family(family)?.serialize().into_bytes(), true))
        }
    }
}

// Cache file: one line per factorization, "sign p^e p^e ...".
fn load_cache(path: &PathBuf) {
    let Ok(text) = std::fs::read_to_string(path) else {
        return;
    };
    for line in text.lines() {
        let mut it = line.split_whitespace();
        let Some(Ok(sign)) = it.next().map(str::parse::<i8>) else {
            continue;
        };
        let factors: Option<Vec<(BigInt, u32)>> = it
            .map(|pe| {
                let (p, e) = pe.split_once('^')?;
                Some((p.parse().ok()?, e.parse().ok()?))
            })
            .collect();
        if let Some(factors) = factors {
            cache_insert(Factorization { sign, factors });
        }
    }
}

fn save_cache(path: &PathBuf) -> std::io::Result<()> {
    let mut out = String::new();
    for f in cache_entries() {
        out.push_str(&f.sign.to_string());
        for (p, e) in &f.factors {
            write!(out, " {p}^{e}").unwrap();
        }
        out.push('\n');
    }
    std::fs::write(path, out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("rootnum: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool");
    }
    let cache = std::env::var_os("ROOTNUM_CACHE").map(PathBuf::from);
    if let Some(p) = &cache {
        load_cache(p);
    }
    let result = dispatch(&cli);
    if let Some(p) = &cache {
        if let Err(e) = save_cache(p) {
            eprintln!("rootnum: cache {}: {e}", p.display());
        }
    }
    match result {
        Ok((out, ok)) => {
            std::io::stdout().write_all(&out).expect("stdout");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("rootnum: the two paths disagree on at least one fiber");
                ExitCode::from(1)
            }
        }
        Err(Failure(msg, code)) => {
            eprintln!("rootnum: {msg}");
            ExitCode::from(code)
        }
    }
}
