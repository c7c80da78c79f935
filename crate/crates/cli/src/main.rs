use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use galois_locus::algebra::parse::{format_poly, parse_field, parse_point, parse_poly};
use galois_locus::classify::{detect_inner_dense, detect_outer_dense, scan_density};
use galois_locus::galois::{is_galois, slice_check, GaloisOptions, Status};
use galois_locus::geometry::{Hypersurface, ProjPoint};
use galois_locus::oracle::{cross_check, DEFAULT_BUDGET};
use galois_locus::par::{self, Mode};
use galois_locus::report::{
    point_coeffs, CheckBody, ClassifyBody, Config, DetectionJson, Envelope, ErrorBody, GroupBody,
    Input, ScanBody, SliceBody,
};
use galois_locus::Error;

/// Galois points of hypersurfaces over finite fields.
#[derive(Parser, Debug)]
#[command(name = "galois-locus", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Hypersurface, e.g. "X0^2*X1 - X2^3 over GF(3)"
    #[arg(required_unless_present = "batch", conflicts_with = "batch")]
    poly: Option<String>,
    /// Field used when the polynomial has no `over` clause, e.g. GF(9) or "GF(2^2; t^2+t+1)"
    #[arg(long)]
    field: Option<String>,
    /// Largest constant extension degree tried when materializing roots
    #[arg(long, default_value_t = 12)]
    m_max: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// One query per line: `<polynomial> [@ <point>]`
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Compact single-line JSON (default)
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide whether a point is Galois
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: Option<String>,
        /// Compare with the linear-automorphism and splitting-tower oracles
        #[arg(long)]
        cross_check: bool,
        /// Enumeration budget for the linear-automorphism oracle
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Search for inner and outer normal forms
    Classify {
        #[command(flatten)]
        common: Common,
        /// Append a density scan over GF(q^M), optionally with a sample count
        #[arg(long, num_args = 1..=2, value_names = ["M", "SAMPLES"])]
        scan: Option<Vec<u64>>,
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Galois densities over GF(q^m)
    Scan {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Number of points sampled; 0 scans exhaustively
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Compare the group at a point with the group on a hyperplane section
    Slice {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: Option<String>,
    },
    /// Automorphism group at a Galois point
    Group {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: Option<String>,
    },
}

impl Cmd {
    fn common(&self) -> &Common {
        match self {
            Cmd::Check { common, .. }
            | Cmd::Classify { common, .. }
            | Cmd::Scan { common, .. }
            | Cmd::Slice { common, .. }
            | Cmd::Group { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Cmd::Check { .. } => "check",
            Cmd::Classify { .. } => "classify",
            Cmd::Scan { .. } => "scan",
            Cmd::Slice { .. } => "slice",
            Cmd::Group { .. } => "group",
        }
    }

    fn point(&self) -> Option<&str> {
        match self {
            Cmd::Check { point, .. } | Cmd::Slice { point, .. } | Cmd::Group { point, .. } => {
                point.as_deref()
            }
            _ => None,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::NotPrime(_) | Error::BadModulus(_) => 1,
        Error::Cap(_) | Error::Inconclusive(_) | Error::FieldTooLarge(..) => 3,
        _ => 2,
    }
}

struct Resolved {
    x: Hypersurface,
    point: Option<ProjPoint>,
    config: Config,
    opts: GaloisOptions,
}

fn resolve(
    cmd: &Cmd,
    text: &str,
    point: Option<&str>,
    input: &mut Input,
) -> Result<Resolved, Error> {
    let c = cmd.common();
    let default = c.field.as_deref().map(parse_field).transpose()?;
    let parsed = parse_poly(text, default.as_ref())?;
    input.polynomial = format_poly(&parsed.poly);
    let x = Hypersurface::new(parsed.poly)?;
    let point = match point {
        Some(s) => {
            let p = ProjPoint::new(x.field(), parse_point(s, x.field())?)?;
            if p.len() != x.nvars() {
                return Err(Error::Parse(format!(
                    "point has {} coordinates, expected {}",
                    p.len(),
                    x.nvars()
                )));
            }
            input.point = Some(point_coeffs(&p));
            Some(p)
        }
        None => None,
    };
    let opts = GaloisOptions {
        m_max: c.m_max,
        seed: c.seed,
    };
    let mut config = Config::new(x.field(), &opts);
    match cmd {
        Cmd::Check {
            cross_check,
            budget,
            ..
        } => {
            config.cross_check = *cross_check;
            config.budget = cross_check.then_some(*budget);
        }
        Cmd::Scan { samples, .. } => config.samples = Some(*samples),
        Cmd::Classify {
            scan: Some(s),
            samples,
            ..
        } => config.samples = Some(s.get(1).map_or(*samples, |&v| v as usize)),
        _ => {}
    }
    Ok(Resolved {
        x,
        point,
        config,
        opts,
    })
}

fn need_point(r: &Resolved) -> Result<&ProjPoint, Error> {
    r.point
        .as_ref()
        .ok_or_else(|| Error::Parse("this command needs --point".into()))
}

/// One query to one JSON document and an exit code.
fn run(cmd: &Cmd, text: &str, point: Option<&str>, pretty: bool) -> (String, u8) {
    let mut input = Input {
        text: text.to_string(),
        polynomial: String::new(),
        point: None,
        point_text: point.map(str::to_string),
    };
    let name = cmd.name();
    let r = match resolve(cmd, text, point, &mut input) {
        Ok(r) => r,
        Err(e) => {
            return (
                Envelope::new(name, None, input, ErrorBody::new(&e)).to_json(pretty),
                exit_code(&e),
            )
        }
    };
    let config = r.config.clone();
    let fail = |e: Error, input: Input| {
        (
            Envelope::new(name, Some(config.clone()), input, ErrorBody::new(&e)).to_json(pretty),
            exit_code(&e),
        )
    };
    let out = match cmd {
        Cmd::Check {
            cross_check: cc,
            budget,
            ..
        } => (|| {
            let p = need_point(&r)?;
            let rep = is_galois(&r.x, p, &r.opts)?;
            let check = if *cc {
                Some(cross_check(&r.x, p, &rep, *budget, Mode::default())?)
            } else {
                None
            };
            let code = if rep.status == Status::Inconclusive {
                3
            } else {
                0
            };
            Ok((
                Envelope::new(
                    name,
                    Some(config.clone()),
                    input.clone(),
                    CheckBody::new(&rep, check.as_ref()),
                )
                .to_json(pretty),
                code,
            ))
        })(),
        Cmd::Classify { scan, samples, .. } => (|| {
            let inner = detect_inner_dense(&r.x)?;
            let outer = detect_outer_dense(&r.x)?;
            let scan = match scan {
                Some(s) => {
                    let m = s[0] as u32;
                    let n = s.get(1).map_or(*samples, |&v| v as usize);
                    Some(scan_density(
                        &r.x,
                        m,
                        n,
                        r.opts.seed,
                        &r.opts,
                        Mode::default(),
                    )?)
                }
                None => None,
            };
            let body = ClassifyBody {
                status: "ok",
                inner: DetectionJson::inner(&inner),
                outer: DetectionJson::outer(&outer),
                scan,
            };
            Ok((
                Envelope::new(name, Some(config.clone()), input.clone(), body).to_json(pretty),
                0,
            ))
        })(),
        Cmd::Scan { m, samples, .. } => (|| {
            let scan = scan_density(&r.x, *m, *samples, r.opts.seed, &r.opts, Mode::default())?;
            Ok((
                Envelope::new(
                    name,
                    Some(config.clone()),
                    input.clone(),
                    ScanBody { status: "ok", scan },
                )
                .to_json(pretty),
                0,
            ))
        })(),
        Cmd::Slice { .. } => (|| {
            let slice = slice_check(&r.x, need_point(&r)?, &r.opts)?;
            Ok((
                Envelope::new(
                    name,
                    Some(config.clone()),
                    input.clone(),
                    SliceBody {
                        status: "ok",
                        slice,
                    },
                )
                .to_json(pretty),
                0,
            ))
        })(),
        Cmd::Group { .. } => (|| {
            let rep = is_galois(&r.x, need_point(&r)?, &r.opts)?;
            match (&rep.data, &rep.group) {
                (Some(d), Some(g)) => {
                    let body = GroupBody {
                        status: "ok",
                        group: g.clone(),
                        automorphisms: rep.automorphisms.clone(),
                        constants: d.field.base().to_string(),
                        table: d.table.clone(),
                        m_used: rep.m_used,
                    };
                    Ok((
                        Envelope::new(name, Some(config.clone()), input.clone(), body)
                            .to_json(pretty),
                        0,
                    ))
                }
                _ if rep.status == Status::Inconclusive => {
                    Err(Error::Inconclusive("no verdict within m_max".into()))
                }
                _ => Err(Error::precondition(
                    "not_galois",
                    format!("the point is {}", rep.status),
                )),
            }
        })(),
    };
    out.unwrap_or_else(|e| fail(e, input))
}

fn batch_queries(path: &PathBuf) -> Result<Vec<(String, Option<String>)>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once(" @ ") {
            Some((f, p)) => (f.trim().to_string(), Some(p.trim().to_string())),
            None => (l.to_string(), None),
        })
        .collect())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    par::init_threads();
    let c = cli.cmd.common();
    let pretty = c.pretty;
    if let Some(path) = &c.batch {
        let queries = match batch_queries(path) {
            Ok(q) => q,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
        };
        let results = par::map(Mode::default(), &queries, |(f, p)| {
            run(&cli.cmd, f, p.as_deref().or(cli.cmd.point()), pretty)
        });
        let mut worst = 0;
        for (json, code) in results {
            println!("{json}");
            worst = worst.max(code);
        }
        return ExitCode::from(worst);
    }
    let text = c.poly.as_deref().unwrap_or_default();
    let (json, code) = run(&cli.cmd, text, cli.cmd.point(), pretty);
    println!("{json}");
    ExitCode::from(code)
}
