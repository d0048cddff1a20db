//! The `arithnull` command line. Every subcommand prints one JSON document
//! to stdout (or to `--output`) and reports failures on stderr with the exit
//! codes of [`Error::exit_code`].

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::canny_emiris::{ce_matrix_retrying, ce_resultant_suite};
use crate::geometry::{bound, lattice_data, normalized_volume, support, BoundInputs, SupportSet, STATEMENTS};
use crate::heights::{
    global_height, local_height_exact, mahler_auto, mahler_sphere_mc, Place, DEFAULT_SAMPLES,
};
use crate::logexpr::{parse_number, LogLinear};
use crate::nullsatz::{
    certificate_search, certificate_verify, check_dnh, check_masser_philippon, fixture_dnh, fixture_geometric,
    fixture_masser_philippon, report_all_bounds, BezoutCertificate, SearchStrategy,
};
use crate::poly::{max_var_index, parse_with_nvars, MultiPoly};
use crate::quotient::{divide_trace_formula, pseudo_jacobian, QuotientAlgebra};
use crate::Rational;

#[derive(Parser, Debug)]
#[command(name = "arithnull", version, about = "Heights, volumes, trace-formula division and Bezout certificates over Q")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Local or global height of a polynomial. Statements: product formula, local heights.
    Height {
        file: PathBuf,
        /// `inf` or a prime.
        #[arg(long, default_value = "inf")]
        place: String,
        /// Sum the local heights over every place that contributes.
        #[arg(long)]
        all_places: bool,
    },
    /// Mahler measure: exact for univariate input, Monte Carlo otherwise.
    /// Statements: eq1, sphere-gap.
    Mahler {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Spherical measure over `r` groups of `n` variables, given as `r:n`.
        #[arg(long)]
        spherical: Option<String>,
    },
    /// Normalized volume of the union of the supports. Statements: bernstein, cor3.
    Volume {
        files: Vec<PathBuf>,
        /// Adjoin 0, e_1, ..., e_n to the support.
        #[arg(long)]
        frame: bool,
    },
    /// Evaluates a bound. Statements: every id listed below.
    #[command(after_help = statement_help())]
    Bound(BoundArgs),
    /// Canny–Emiris matrix of a support set. Statements: cota-esparsa, cor3.
    CeMatrix {
        /// JSON file {"n": .., "points": [[..], ..]}.
        #[arg(long)]
        support: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON file {"values": [[..], ..]}: one row of coefficients per polynomial.
        #[arg(long)]
        specialize: Option<PathBuf>,
        /// Compare with the Sylvester resultant on this many random specializations.
        #[arg(long, default_value_t = 0)]
        trials: usize,
    },
    /// Division in Q[x]/(F) through the trace formula. Statements: division, traza, norma.
    Divide {
        #[arg(long, num_args = 1.., required = true)]
        ideal: Vec<PathBuf>,
        #[arg(long)]
        divisor: PathBuf,
        #[arg(long)]
        dividend: PathBuf,
    },
    /// Searches a Bezout certificate, minimal degree first. Statements: theorem1, lemma-n1.
    Certify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Largest degree tried; defaults to 4 n d^n.
        #[arg(long)]
        deg_bound: Option<u32>,
        /// Solve at the bound only instead of escalating from 0.
        #[arg(long)]
        at_bound: bool,
        /// Accepted for a uniform interface; the search is deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verifies a certificate and compares it with the bounds. Statements: theorem1, theorem2, cor3.
    Verify {
        cert: PathBuf,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Writes an extremal system. Statements: geometric, lemma-dn.
    Fixture {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long = "H")]
        big_h: String,
        /// Directory for f1.txt.. and cert.json.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Search a certificate and run the family's divisibility check.
        #[arg(long)]
        search: bool,
    },
    /// All applicable bounds for a system. Statements: theorem1, theorem2, cor3, cor-intrinsic, lemma-d1, lemma-n1.
    BoundReport {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Runs the acceptance criteria and prints a pass/fail table as JSON.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Geo,
    Mp,
    Dnh,
}

#[derive(Args, Debug)]
struct BoundArgs {
    statement: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    /// Height, e.g. `2`, `log(3)` or `1/2 + 3*log(2)`.
    #[arg(long)]
    h: Option<String>,
    #[arg(long)]
    delta: Option<u64>,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    vol: Option<u64>,
    /// Comma-separated degrees.
    #[arg(long)]
    di: Option<String>,
    /// Semicolon-separated heights, one per degree.
    #[arg(long)]
    hi: Option<String>,
    #[arg(long)]
    place: Option<String>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long = "big-n")]
    big_n: Option<u64>,
    #[arg(long)]
    card: Option<u64>,
    #[arg(long)]
    deg_v: Option<u64>,
    #[arg(long)]
    h_v: Option<String>,
    #[arg(long)]
    deg_w: Option<u64>,
    #[arg(long)]
    h_w: Option<String>,
    #[arg(long)]
    dim_v: Option<u64>,
    #[arg(long)]
    dim_w: Option<u64>,
    #[arg(long)]
    h_phi: Option<String>,
    #[arg(long)]
    deg_f: Option<u64>,
    #[arg(long)]
    h_f: Option<String>,
    #[arg(long)]
    deg_g: Option<u64>,
    #[arg(long)]
    h_g: Option<String>,
    #[arg(long)]
    deg_t_g: Option<u64>,
    #[arg(long)]
    deg_x_g: Option<u64>,
    #[arg(long)]
    ell: Option<u64>,
    /// Comma-separated degrees of the varieties V_j.
    #[arg(long)]
    deg_vj: Option<String>,
    /// Semicolon-separated heights of the varieties V_j.
    #[arg(long)]
    h_vj: Option<String>,
}

fn statement_help() -> String {
    let mut out = String::from("Statement ids:\n");
    for (id, what) in STATEMENTS {
        out.push_str(&format!("  {id:<16} {what}\n"));
    }
    out
}

/// Runs the command line and returns the process exit status.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((value, code)) => match emit(&value, cli.output.as_deref()) {
            Ok(()) => code,
            Err(e) => report(&e),
        },
        Err(e) => report(&e),
    }
}

fn report(e: &Error) -> i32 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn emit(value: &Value, path: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Reads one polynomial per file into a common ring, at least `min_vars` wide.
fn read_polys(paths: &[PathBuf], min_vars: usize) -> Result<Vec<MultiPoly>> {
    let texts = paths.iter().map(|p| read(p)).collect::<Result<Vec<_>>>()?;
    let mut n = min_vars;
    for t in &texts {
        n = n.max(max_var_index(t)?);
    }
    texts.iter().map(|t| parse_with_nvars(t.trim(), n)).collect()
}

fn read_json(path: &Path) -> Result<Value> {
    Ok(serde_json::from_str(&read(path)?)?)
}

fn log_value(s: &Option<String>) -> Result<Option<LogLinear>> {
    s.as_deref().map(LogLinear::parse).transpose()
}

fn count_list(s: &Option<String>) -> Result<Option<Vec<u64>>> {
    s.as_deref()
        .map(|t| {
            t.split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|_| Error::InvalidArgument(format!("bad count `{x}`"))))
                .collect()
        })
        .transpose()
}

fn log_list(s: &Option<String>) -> Result<Option<Vec<LogLinear>>> {
    s.as_deref().map(|t| t.split(';').map(LogLinear::parse).collect()).transpose()
}

fn bound_inputs(a: &BoundArgs) -> Result<BoundInputs> {
    Ok(BoundInputs {
        n: a.n,
        d: a.d,
        s: a.s,
        h: log_value(&a.h)?,
        delta: a.delta,
        eta: log_value(&a.eta)?,
        vol: a.vol,
        di: count_list(&a.di)?,
        hi: log_list(&a.hi)?,
        place: a.place.as_deref().map(Place::parse).transpose()?,
        r: a.r,
        m: a.m,
        big_n: a.big_n,
        card: a.card,
        deg_v: a.deg_v,
        h_v: log_value(&a.h_v)?,
        deg_w: a.deg_w,
        h_w: log_value(&a.h_w)?,
        dim_v: a.dim_v,
        dim_w: a.dim_w,
        h_phi: log_value(&a.h_phi)?,
        deg_f: a.deg_f,
        h_f: log_value(&a.h_f)?,
        deg_g: a.deg_g,
        h_g: log_value(&a.h_g)?,
        deg_t_g: a.deg_t_g,
        deg_x_g: a.deg_x_g,
        ell: a.ell,
        deg_vj: count_list(&a.deg_vj)?,
        h_vj: log_list(&a.h_vj)?,
    })
}

fn rational_of(v: &Value) -> Result<Rational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(Error::Json("specialization values must be numbers or strings".into())),
    };
    parse_number(text.trim()).ok_or_else(|| Error::Json(format!("bad rational `{text}`")))
}

fn support_from_json(v: &Value) -> Result<SupportSet> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Json("support needs `n`".into()))? as usize;
    let points = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("support needs `points`".into()))?
        .iter()
        .map(|p| {
            p.as_array()
                .ok_or_else(|| Error::Json("points must be arrays".into()))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| Error::Json("coordinates must be integers".into())))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SupportSet::new(n, points)
}

fn big_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::InvalidArgument(format!("`{s}` is not an integer")))
}

fn execute(cli: &Cli) -> Result<(Value, i32)> {
    let ok = |v: Value| Ok((v, 0));
    match &cli.command {
        Command::Height { file, place, all_places } => {
            let f = read_polys(std::slice::from_ref(file), 0)?.remove(0);
            if *all_places {
                let r = global_height(&[f])?;
                return ok(json!({"value": r.global, "exact": r.global_exact, "places": r.locals}));
            }
            let v = Place::parse(place)?;
            let h = local_height_exact(&f, &v)?;
            ok(json!({"value": h.to_f64(), "exact": h.to_string(), "place": v.to_string()}))
        }
        Command::Mahler { file, samples, seed, spherical } => {
            let f = read_polys(std::slice::from_ref(file), 0)?.remove(0);
            let m = match spherical {
                Some(spec) => {
                    let (r, n) = spec
                        .split_once(':')
                        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                        .ok_or_else(|| Error::InvalidArgument(format!("`{spec}` is not of the form r:n")))?;
                    let f = if f.nvars() < r * n { f.with_nvars(r * n) } else { f };
                    mahler_sphere_mc(&f, r, n, *samples, *seed)?
                }
                None => mahler_auto(&f, *samples, *seed)?,
            };
            ok(serde_json::to_value(m)?)
        }
        Command::Volume { files, frame } => {
            let fs = read_polys(files, 0)?;
            let a = support(&fs, *frame)?;
            let v = normalized_volume(&a)?;
            ok(json!({"n": a.n, "points": a.points, "volume": v, "frame": frame}))
        }
        Command::Bound(args) => ok(bound(&args.statement, &bound_inputs(args)?)?.to_json()),
        Command::CeMatrix { support: path, seed, specialize, trials } => {
            let a = support_from_json(&read_json(path)?)?;
            let r = lattice_data(&a)?.r;
            let spec = ce_matrix_retrying(&a, r, None, *seed, 16)?;
            let mut out = json!({
                "matrix": spec,
                "order": spec.order,
                "nonzero_per_row": spec.nonzero_per_row(),
                "volume": normalized_volume(&a)?,
            });
            if let Some(p) = specialize {
                let v = read_json(p)?;
                let rows = v
                    .get("values")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Json("specialization needs `values`".into()))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| Error::Json("values must be arrays".into()))?
                            .iter()
                            .map(rational_of)
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let det = spec.specialize(&rows)?.det();
                out["specialization"] = json!({"det": det.to_string()});
                if r == 1 {
                    out["specialization"]["resultant_check"] =
                        serde_json::to_value(crate::geometry::ce_resultant_check(&spec, &rows)?)?;
                }
            }
            if *trials > 0 {
                out["resultant_suite"] = serde_json::to_value(ce_resultant_suite(&spec, *trials, *seed)?)?;
            }
            ok(out)
        }
        Command::Divide { ideal, divisor, dividend } => {
            let mut all = ideal.clone();
            all.push(divisor.clone());
            all.push(dividend.clone());
            let mut ps = read_polys(&all, ideal.len())?;
            let g = ps.pop().expect("dividend");
            let f = ps.pop().expect("divisor");
            let b = QuotientAlgebra::new(&ps)?;
            let td = pseudo_jacobian(&ps)?;
            let r = divide_trace_formula(&b, &td, &f, &g)?;
            ok(json!({
                "q": r.q.to_string(),
                "q_reduced": r.q_reduced.to_string(),
                "norm_jf": r.norm_jf.to_string(),
                "dimension": b.dim(),
                "checks": {"identity": r.identity, "degree_x": r.degree_x, "degree_bound": r.degree_bound, "degree_ok": r.degree_ok},
            }))
        }
        Command::Certify { files, deg_bound, at_bound, seed: _ } => {
            let fs = read_polys(files, 0)?;
            let strategy = if *at_bound { SearchStrategy::AtBound } else { SearchStrategy::MinimalFirst };
            ok(certificate_search(&fs, *deg_bound, strategy)?.to_json())
        }
        Command::Verify { cert, files } => {
            let c = BezoutCertificate::from_json(&read_json(cert)?)?;
            let fs = read_polys(files, c.n)?;
            ok(serde_json::to_value(certificate_verify(&c, &fs)?)?)
        }
        Command::Fixture { family, n, d, big_h, dir, search } => {
            let h = big_int(big_h)?;
            let fx = match family {
                Family::Geo => fixture_geometric(*n, *d, &h)?,
                Family::Mp => fixture_masser_philippon(*n, *d, &h)?,
                Family::Dnh => fixture_dnh(*n, *d, &h)?,
            };
            let mut out = json!({
                "family": fx.name,
                "n": fx.n,
                "d": fx.d,
                "H": fx.big_h.to_string(),
                "system": fx.system.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            let mut cert = fx.certificate.clone();
            if *search {
                let c = certificate_search(&fx.system, None, SearchStrategy::MinimalFirst)?;
                let w = match family {
                    Family::Mp => Some(check_masser_philippon(&c, *n, *d, &h)?),
                    Family::Dnh => Some(check_dnh(&c, *n, *d, &h)?),
                    Family::Geo => None,
                };
                out["witness"] = serde_json::to_value(w)?;
                out["searched"] = c.to_json();
                cert.get_or_insert(c);
            }
            if let Some(c) = &cert {
                out["certificate"] = c.to_json();
            }
            if let Some(dir) = dir {
                fs::create_dir_all(dir)?;
                for (i, f) in fx.system.iter().enumerate() {
                    fs::write(dir.join(format!("f{}.txt", i + 1)), format!("{f}\n"))?;
                }
                if let Some(c) = &cert {
                    fs::write(dir.join("cert.json"), serde_json::to_string_pretty(&c.to_json())? + "\n")?;
                }
            }
            ok(out)
        }
        Command::BoundReport { files, cert } => {
            let c = cert.as_ref().map(|p| read_json(p).and_then(|v| BezoutCertificate::from_json(&v))).transpose()?;
            let fs = read_polys(files, c.as_ref().map_or(0, |c| c.n))?;
            ok(serde_json::to_value(report_all_bounds(&fs, c.as_ref())?)?)
        }
        Command::Selftest { seed } => {
            let report = crate::selftest::run(*seed);
            let code = if report.all_passed() { 0 } else { 1 };
            Ok((serde_json::to_value(&report)?, code))
        }
    }
}
