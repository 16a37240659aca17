//! `appell` — exact tables and identity verification for Appell polynomial
//! families, reciprocal polynomials, and Faulhaber-type decompositions.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports failures,
//! 2 on usage errors (unknown family, bad arguments, unsupported requests).

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use appell::arith::format_rational;
use appell::faulhaber::{decompose, Route};
use appell::umbral::{alpha_rs, check_reciprocity};
use appell::verify::{run as run_verify, Suite};
use appell::{AppellFamily, PolyOrSeries, Report};

#[derive(Parser)]
#[command(name = "appell", version, about = "Exact Appell / Faulhaber polynomial toolkit")]
struct Cli {
    /// Family: `bernoulli`, `euler`, or a path to a JSON family file
    /// (`{"name": .., "reflection": .., "alpha": ["p/q", ..]}`). Repeatable.
    #[arg(long = "family", global = true, action = ArgAction::Append)]
    family: Vec<String>,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Output format (default: text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for the randomized spot checks in `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    /// A_n(x)
    Poly,
    /// A_R,n(x)
    Ar,
    /// A_G,n,k(x) (Laurent; use --k, default k = n)
    Ag,
    /// A_S,n(x), or A_S,n,k(x) with --k
    As,
    /// the coefficients alpha_n
    Alpha,
    /// the rank/shift numbers alpha_{r,s} for r, s in the range
    AlphaRs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Direct,
    Bernoulli,
    Faulhaber,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Subst,
    Reciprocal,
    Recurrence,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Emit coefficient tables for a family.
    Coeffs {
        /// Index or inclusive range, e.g. `5` or `0..5`.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, value_enum)]
        what: What,
        /// Second index for `ag` / `as` (defaults to n).
        #[arg(long)]
        k: Option<i64>,
    },
    /// Reciprocity report for rank/shift polynomials.
    Umbral {
        #[arg(long, default_value_t = 8)]
        rmax: usize,
        /// Include the bivariate identities.
        #[arg(long)]
        bivariate: bool,
    },
    /// Faulhaber-type decomposition F_n(u) with A_n(x) = (u')^(n mod 2) F_n(u).
    Faulhaber {
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
    },
    /// Classical Faulhaber polynomial FF_n(y) with S_n(m) = FF_n(C(m,2)); odd n.
    FaulhaberClassical {
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
    },
    /// Power sums S_n(m) = 0^n + 1^n + ... + (m-1)^n.
    Powersum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Via::All)]
        via: Via,
    },
    /// Run the exact identity verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (parse(a)?, parse(b)?);
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        Ok((a, b))
    } else {
        let v = parse(s)?;
        Ok((v, v))
    }
}

/// Usage-level failure: message to stderr, exit code 2.
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<appell::Error> for UsageError {
    fn from(e: appell::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(UsageError(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli
        .format
        .unwrap_or(if cli.json { Format::Json } else { Format::Text });
    match dispatch(&cli, format) {
        Ok(verification_failed) => {
            if verification_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn resolve_families(specs: &[String], default: &[&str]) -> CliResult<Vec<AppellFamily>> {
    let specs: Vec<String> = if specs.is_empty() {
        default.iter().map(|s| s.to_string()).collect()
    } else {
        specs.to_vec()
    };
    specs
        .iter()
        .map(|s| AppellFamily::resolve(s).map_err(UsageError::from))
        .collect()
}

/// Returns whether a verification ran and failed (drives exit code 1).
fn dispatch(cli: &Cli, format: Format) -> CliResult<bool> {
    match &cli.command {
        Command::Coeffs { n, what, k } => {
            let family = single_family(&cli.family)?;
            cmd_coeffs(&family, *n, *what, *k, format)?;
            Ok(false)
        }
        Command::Umbral { rmax, bivariate } => {
            let families = resolve_families(&cli.family, &["bernoulli", "euler"])?;
            let mut rep = Report::new("umbral");
            for f in &families {
                rep.merge(check_reciprocity(f, *rmax, *bivariate)?);
            }
            rep.sort_cases();
            print_report(&rep, format)?;
            Ok(rep.fail_count() > 0)
        }
        Command::Faulhaber { n, route } => {
            let family = single_family(&cli.family)?;
            cmd_faulhaber(&family, *n, *route, format)?;
            Ok(false)
        }
        Command::FaulhaberClassical { n } => {
            cmd_faulhaber_classical(*n, format)?;
            Ok(false)
        }
        Command::Powersum { n, m, via } => {
            cmd_powersum(*n, *m, *via, format)?;
            Ok(false)
        }
        Command::Verify { suite, max_n } => {
            let families = resolve_families(&cli.family, &["bernoulli", "euler"])?;
            let suite = Suite::from_str(suite)?;
            let rep = run_verify(suite, *max_n, &families, cli.seed)?;
            print_report(&rep, format)?;
            Ok(rep.fail_count() > 0)
        }
    }
}

fn single_family(specs: &[String]) -> CliResult<AppellFamily> {
    match specs {
        [] => Ok(AppellFamily::bernoulli()),
        [one] => AppellFamily::resolve(one).map_err(UsageError::from),
        _ => usage("this subcommand takes a single --family"),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn csv_row(cells: &[String]) {
    println!("{}", cells.join(","));
}

fn cmd_coeffs(
    family: &AppellFamily,
    (lo, hi): (usize, usize),
    what: What,
    k: Option<i64>,
    format: Format,
) -> CliResult<()> {
    let mut items = Vec::new();
    match what {
        What::Poly | What::Ar | What::As if k.is_none() || matches!(what, What::Poly | What::Ar) => {
            if k.is_some() {
                return usage("--k only applies to --what ag or as");
            }
            for n in lo..=hi {
                let (label, p) = match what {
                    What::Poly => ("A", family.appell(n)?),
                    What::Ar => ("A_R", family.reciprocal(n)?),
                    What::As => ("A_S", family.as_poly(n)?.0),
                    _ => unreachable!(),
                };
                match format {
                    Format::Text => println!("{label}_{n}(x) = {p}"),
                    Format::Csv => {
                        let mut cells = vec![n.to_string()];
                        cells.extend(p.window().iter().map(format_rational));
                        csv_row(&cells);
                    }
                    Format::Json => items.push(json!({"n": n, "poly": p.to_json()})),
                }
            }
        }
        What::As => {
            // A_S,n,k
            let k = k.expect("guarded above");
            for n in lo..=hi {
                // truncation covering every in-range coefficient read
                let order = n + k.unsigned_abs() as usize;
                match family.as_nk(n, k, Some(order))? {
                    PolyOrSeries::Poly(p) => match format {
                        Format::Text => println!("A_S_{n},{k}(x) = {p}"),
                        Format::Csv => {
                            let mut cells = vec![n.to_string(), k.to_string()];
                            cells.extend(p.window().iter().map(format_rational));
                            csv_row(&cells);
                        }
                        Format::Json => {
                            items.push(json!({"n": n, "k": k, "poly": p.to_json()}))
                        }
                    },
                    PolyOrSeries::Series(s) => match format {
                        Format::Text => {
                            let coeffs: Vec<String> =
                                s.coeffs().iter().map(format_rational).collect();
                            println!(
                                "A_S_{n},{k}(x) = [{}] + O(x^{})",
                                coeffs.join(", "),
                                s.order() + 1
                            );
                        }
                        Format::Csv => {
                            let mut cells = vec![n.to_string(), k.to_string()];
                            cells.extend(s.coeffs().iter().map(format_rational));
                            csv_row(&cells);
                        }
                        Format::Json => items.push(json!({
                            "n": n, "k": k, "order": s.order(),
                            "coeffs": s.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                        })),
                    },
                }
            }
        }
        What::Ag => {
            for n in lo..=hi {
                let kk = k.unwrap_or(n as i64);
                let g = family.generalized_reciprocal(n, kk)?;
                match format {
                    Format::Text => println!("A_G_{n},{kk}(x) = {g}"),
                    Format::Csv => {
                        return usage("csv is not supported for Laurent output; use --format json")
                    }
                    Format::Json => items.push(json!({"n": n, "k": kk, "laurent": g.to_json()})),
                }
            }
        }
        What::Alpha => {
            if k.is_some() {
                return usage("--k only applies to --what ag or as");
            }
            for n in lo..=hi {
                let a = family.alpha(n)?;
                match format {
                    Format::Text => println!("alpha_{n} = {a}"),
                    Format::Csv => csv_row(&[n.to_string(), format_rational(&a)]),
                    Format::Json => items.push(json!({"n": n, "value": format_rational(&a)})),
                }
            }
        }
        What::AlphaRs => {
            if k.is_some() {
                return usage("--k only applies to --what ag or as");
            }
            for r in lo..=hi {
                for s in lo..=hi {
                    let a = alpha_rs(family, r, s)?;
                    match format {
                        Format::Text => println!("alpha_{{{r},{s}}} = {a}"),
                        Format::Csv => {
                            csv_row(&[r.to_string(), s.to_string(), format_rational(&a)])
                        }
                        Format::Json => items.push(
                            json!({"r": r, "s": s, "value": format_rational(&a)}),
                        ),
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    if format == Format::Json {
        print_json(&json!({
            "family": family.name(),
            "what": format!("{what:?}").to_lowercase(),
            "items": items,
        }));
    }
    Ok(())
}

fn cmd_faulhaber(
    family: &AppellFamily,
    (lo, hi): (usize, usize),
    route: RouteArg,
    format: Format,
) -> CliResult<()> {
    let mut items = Vec::new();
    for n in lo..=hi {
        let subst = decompose(family, n, Route::Subst)?;
        let reci = decompose(family, n, Route::Reciprocal)?;
        let recur = decompose(family, n, Route::Recurrence)?;
        let agree = subst == reci && subst == recur;
        let picked = match route {
            RouteArg::Subst | RouteArg::All => &subst,
            RouteArg::Reciprocal => &reci,
            RouteArg::Recurrence => &recur,
        };
        match format {
            Format::Text => {
                println!("{picked}   (delta={}, routes_agree={agree})", picked.delta());
            }
            Format::Csv => {
                let mut cells = vec![n.to_string(), picked.delta().to_string()];
                cells.extend(picked.coeffs().iter().map(format_rational));
                csv_row(&cells);
            }
            Format::Json => items.push(json!({
                "n": n,
                "delta": picked.delta(),
                "fp": picked.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                "fh": picked.fh_vec().iter().map(format_rational).collect::<Vec<_>>(),
                "routes_agree": agree,
            })),
        }
    }
    if format == Format::Json {
        if items.len() == 1 {
            print_json(&items[0]);
        } else {
            print_json(&Value::Array(items));
        }
    }
    Ok(())
}

fn cmd_faulhaber_classical((lo, hi): (usize, usize), format: Format) -> CliResult<()> {
    let odd: Vec<usize> = (lo..=hi).filter(|n| n % 2 == 1).collect();
    if odd.is_empty() {
        // single even n: surface the precise unsupported-case error
        return Err(appell::Error::EvenPowerSum.into());
    }
    let mut items = Vec::new();
    for n in odd {
        let ff = appell::powersum::classical_faulhaber(n as u32)?;
        match format {
            Format::Text => {
                let p = appell::Polynomial::new(ff.coeffs.clone(), ff.coeffs.len() - 1);
                println!("FF_{n}(y) = {}", p.to_string().replace('x', "y"));
            }
            Format::Csv => {
                let mut cells = vec![n.to_string()];
                cells.extend(ff.coeffs.iter().map(format_rational));
                csv_row(&cells);
            }
            Format::Json => items.push(json!({
                "n": n,
                "coeffs": ff.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
            })),
        }
    }
    if format == Format::Json {
        if items.len() == 1 {
            print_json(&items[0]);
        } else {
            print_json(&Value::Array(items));
        }
    }
    Ok(())
}

fn cmd_powersum(n: u32, m: u32, via: Via, format: Format) -> CliResult<()> {
    let mut values: Vec<(&str, appell::Rational)> = Vec::new();
    if matches!(via, Via::Direct | Via::All) {
        values.push(("direct", appell::powersum::power_sum_direct(n, m)));
    }
    if matches!(via, Via::Bernoulli | Via::All) {
        values.push(("bernoulli", appell::powersum::power_sum_bernoulli(n, m)));
    }
    if matches!(via, Via::Faulhaber | Via::All) {
        if n % 2 == 1 {
            values.push(("faulhaber", appell::powersum::power_sum_faulhaber(n, m)?));
        } else if via == Via::Faulhaber {
            return Err(appell::Error::EvenPowerSum.into());
        }
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    match format {
        Format::Text => {
            for (route, v) in &values {
                println!("S_{n}({m}) = {v} ({route})");
            }
            if values.len() > 1 {
                println!("agree: {agree}");
            }
        }
        Format::Csv => {
            for (route, v) in &values {
                csv_row(&[
                    n.to_string(),
                    m.to_string(),
                    route.to_string(),
                    format_rational(v),
                ]);
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, Value> = values
                .iter()
                .map(|(r, v)| (r.to_string(), Value::String(format_rational(v))))
                .collect();
            print_json(&json!({"n": n, "m": m, "values": map, "agree": agree}));
        }
    }
    if !agree {
        return usage(format!("power-sum routes disagree at n={n} m={m}"));
    }
    Ok(())
}

fn print_report(rep: &Report, format: Format) -> CliResult<()> {
    match format {
        Format::Text => println!("{rep}"),
        Format::Json => print_json(&rep.to_json()),
        Format::Csv => {
            for c in &rep.cases {
                csv_row(&[
                    c.identity_id.clone(),
                    c.params.clone(),
                    c.pass.to_string(),
                ]);
            }
        }
    }
    Ok(())
}
