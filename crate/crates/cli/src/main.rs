use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use chaincodes::code::{default_budget, Distance, LinearCode, Search, BUDGET_ENV};
use chaincodes::constacyclic::{counts, enumerate_all};
use chaincodes::crt_pir::{crt_combine, mds_exists, rs_code, sufficiency_bound, MdsAnswer};
use chaincodes::families::{table1, table1_text, zm_selfdual_mds, Family, TABLE1};
use chaincodes::par::{self, Strategy};
use chaincodes::poly::{factor_xn_minus_lambda, idempotent_from_factor, lift_irreducible};
use chaincodes::{ChainRing, Error, Poly};

#[derive(Parser)]
#[command(name = "chaincodes", version, about = "Codes over finite chain rings and Z_m")]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Codeword budget for exhaustive searches.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Twist {
    #[arg(long)]
    n: usize,
    /// Twist λ as an integer, e.g. 1 or -1.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    lambda: i64,
    /// Ring as zpe:p:e or fpg:p:e.
    #[arg(long)]
    ring: ChainRing,
}

#[derive(Args, Clone)]
struct CodeInput {
    /// Code as JSON ({"ring","n","rows"}); `-` reads stdin.
    #[arg(long, conflicts_with = "rows")]
    code: Option<String>,
    /// Generator rows as a JSON integer matrix, with --ring.
    #[arg(long, requires = "ring")]
    rows: Option<String>,
    #[arg(long)]
    ring: Option<ChainRing>,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - λ into basic irreducibles.
    Factor(Twist),
    /// Lift a residue factor of x^n - λ, or move a code to another precision.
    Lift {
        /// Residue factor coefficients, lowest degree first (e.g. 1,1,1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        factor: Option<Vec<i64>>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lambda: i64,
        /// Code to move, as JSON; `-` reads stdin.
        #[arg(long)]
        code: Option<String>,
        /// Target ring.
        #[arg(long)]
        to: ChainRing,
        /// Lift a self-dual code to a self-dual code.
        #[arg(long)]
        selfdual: bool,
    },
    StandardForm(CodeInput),
    Dual(CodeInput),
    Mindist(CodeInput),
    Classify(CodeInput),
    Torsion {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        i: u32,
    },
    /// Every λ-constacyclic code.
    EnumerateConstacyclic(Twist),
    /// Numbers of λ-constacyclic and free λ-constacyclic codes.
    Count(Twist),
    /// Idempotent generator of ⟨π, γ⟩ for a factor π of x^n - λ.
    Idempotent {
        #[command(flatten)]
        twist: Twist,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        factor: Vec<i64>,
    },
    /// Chinese product of component codes (JSON files).
    Crt {
        #[arg(long = "component", required = true)]
        components: Vec<String>,
    },
    /// Reed-Solomon code over Z_m.
    Rs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: u64,
    },
    MdsExists {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
    },
    /// Sufficient field-size condition for MDS codes.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
    },
    /// Self-dual MDS code over Z_m.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value = "auto")]
        family: Family,
    },
    /// Self-dual MDS table entries (all of them by default).
    Table1 {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Output {
    command: &'static str,
    value: Value,
    text: String,
    code: u8,
}

impl Output {
    fn ok(command: &'static str, value: Value, text: String) -> Self {
        Output {
            command,
            value,
            text,
            code: 0,
        }
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn parse_code(text: &str) -> Result<LinearCode, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("bad code JSON: {e}")))
}

fn load_code(input: &CodeInput) -> Result<LinearCode, Failure> {
    match (&input.code, &input.rows, input.ring) {
        (Some(path), _, _) => parse_code(&read_source(path)?),
        (None, Some(rows), Some(ring)) => {
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(rows).map_err(|e| Failure::Usage(format!("bad --rows: {e}")))?;
            Ok(LinearCode::from_ints(ring, &rows)?)
        }
        _ => Err(Failure::Usage("give --code FILE or --rows JSON --ring SPEC".into())),
    }
}

fn matrix_text(rows: &[Vec<u64>]) -> String {
    if rows.is_empty() {
        return "  (none)\n".into();
    }
    let w = rows.iter().flatten().map(|a| a.to_string().len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|a| format!("{a:>w$}")).collect();
            format!("  [{}]\n", cells.join(" "))
        })
        .collect()
}

fn kv(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

fn poly_from(ring: ChainRing, coeffs: &[i64]) -> Poly {
    Poly::from_ints(ring, coeffs)
}

fn run(cli: &Cli, search: Search) -> Result<Output, Failure> {
    match &cli.command {
        Command::Factor(t) => {
            let lambda = t.ring.from_int(t.lambda);
            let set = factor_xn_minus_lambda(t.n, lambda, t.ring)?;
            set.verify()?;
            let report = set.report();
            let text = kv(&[
                ("ring", t.ring.to_string()),
                ("b", report.b.to_string()),
                ("factors", report.factors.join(", ")),
                ("residues", report.residue_factors.join(", ")),
            ]);
            Ok(Output::ok("factor", serde_json::to_value(&report).unwrap(), text))
        }
        Command::Lift {
            factor,
            n,
            lambda,
            code,
            to,
            selfdual,
        } => match (factor, code) {
            (Some(f), None) => {
                let n = n.ok_or_else(|| Failure::Usage("--factor needs --n".into()))?;
                let h = poly_from(to.residue_field(), f);
                let lifted = lift_irreducible(&h, n, to.from_int(*lambda), *to)?;
                let text = kv(&[("residue", h.to_string()), ("lift", lifted.to_string())]);
                Ok(Output::ok(
                    "lift",
                    json!({"residue": h.to_string(), "lift": lifted.to_string(), "digits": lifted.to_digit_arrays()}),
                    text,
                ))
            }
            (None, Some(path)) => {
                let c = parse_code(&read_source(path)?)?;
                let out = if *selfdual { c.selfdual_lift(to)? } else { c.map_precision(to)? };
                let text = kv(&[
                    ("ring", to.to_string()),
                    ("type", out.code_type().to_string()),
                    ("self-dual", out.is_self_dual().to_string()),
                ]) + &matrix_text(&out.generator_matrix());
                Ok(Output::ok(
                    "lift",
                    json!({"code": out, "type": out.code_type(), "is_self_dual": out.is_self_dual()}),
                    text,
                ))
            }
            _ => Err(Failure::Usage("lift needs exactly one of --factor or --code".into())),
        },
        Command::StandardForm(input) => {
            let c = load_code(input)?;
            let sf = c.standard_form();
            let text = kv(&[
                ("type", c.code_type().to_string()),
                ("k-vector", format!("{:?}", c.code_type().k_vector(c.ring().e()))),
                ("permutation", format!("{:?}", sf.perm)),
            ]) + &matrix_text(&sf.rows);
            Ok(Output::ok(
                "standard-form",
                json!({
                    "permutation": sf.perm,
                    "rows": sf.rows,
                    "generator": c.generator_matrix(),
                    "type": c.code_type(),
                    "k_vector": c.code_type().k_vector(c.ring().e()),
                    "invariants": c.invariants(),
                }),
                text,
            ))
        }
        Command::Dual(input) => {
            let c = load_code(input)?;
            let d = c.dual()?;
            if d.dual()? != c {
                return Err(Error::Verification("double dual differs from the code".into()).into());
            }
            let text = kv(&[
                ("log_p |C|", c.log_size().to_string()),
                ("log_p |C^perp|", d.log_size().to_string()),
                ("type", d.code_type().to_string()),
            ]) + &matrix_text(&d.generator_matrix());
            Ok(Output::ok("dual", json!({"code": d, "type": d.code_type()}), text))
        }
        Command::Mindist(input) => {
            let c = load_code(input)?;
            let dist = c.distance(search)?;
            let (text, code) = match dist {
                Distance::Exact { d } => (kv(&[("d", d.to_string())]), 0),
                Distance::Bounds { lower, upper, size } => (
                    kv(&[
                        ("d", format!("[{lower}, {upper}]")),
                        ("|C|", size.map_or("overflow".into(), |s| s.to_string())),
                        ("budget", search.budget.to_string()),
                    ]),
                    3,
                ),
            };
            Ok(Output {
                command: "mindist",
                value: json!({"distance": dist, "budget": search.budget.to_string()}),
                text,
                code,
            })
        }
        Command::Classify(input) => {
            let c = load_code(input)?;
            let cl = c.classify(search)?;
            let text = kv(&[
                ("d", cl.d.to_string()),
                ("rank", cl.rank.to_string()),
                ("log_p |C|", cl.log_size.to_string()),
                ("type", cl.code_type.to_string()),
                ("mds", cl.is_mds.to_string()),
                ("mdr", cl.is_mdr.to_string()),
                ("self-orthogonal", cl.is_self_orthogonal.to_string()),
                ("self-dual", cl.is_self_dual.to_string()),
                ("free", cl.is_free.to_string()),
            ]);
            Ok(Output::ok("classify", serde_json::to_value(&cl).unwrap(), text))
        }
        Command::Torsion { input, i } => {
            let c = load_code(input)?;
            let t = c.torsion(*i)?;
            let q = c.quotient(*i)?;
            let text = kv(&[
                ("i", i.to_string()),
                ("dim Tor_i", t.log_size().to_string()),
                ("(C:g^i) type", q.code_type().to_string()),
            ]) + &matrix_text(&t.generator_matrix());
            Ok(Output::ok(
                "torsion",
                json!({"i": i, "dimension": t.log_size(), "torsion": t, "quotient": q}),
                text,
            ))
        }
        Command::EnumerateConstacyclic(t) => {
            let lambda = t.ring.from_int(t.lambda);
            let all = enumerate_all(t.n, lambda, t.ring, search.budget)?;
            let descs: Vec<_> = all.iter().map(|c| c.descriptor()).collect();
            let mut text = format!("{} codes\n", descs.len());
            for d in &descs {
                text.push_str(&format!(
                    "  m={:?}  log_p|C|={:<3} free={}\n",
                    d.exponents, d.log_size, d.is_free
                ));
            }
            Ok(Output::ok("enumerate-constacyclic", json!({"codes": descs}), text))
        }
        Command::Count(t) => {
            let c = counts(t.n, t.ring.from_int(t.lambda), t.ring)?;
            let show = |v: Option<u128>| v.map_or("overflow".to_string(), |x| x.to_string());
            let text = kv(&[("b", c.b.to_string()), ("total", show(c.total)), ("free", show(c.free))]);
            Ok(Output::ok("count", serde_json::to_value(c).unwrap(), text))
        }
        Command::Idempotent { twist, factor } => {
            let r = twist.ring;
            let pi = poly_from(r, factor);
            let lambda = r.from_int(twist.lambda);
            let set = factor_xn_minus_lambda(twist.n, lambda, r)?;
            let pi = if pi.ring().e() > 1 && !set.factors().contains(&pi) {
                lift_irreducible(&pi.residue(), twist.n, lambda, r)?
            } else {
                pi
            };
            let e = idempotent_from_factor(&pi, twist.n, lambda)?;
            let text = kv(&[
                ("factor", pi.to_string()),
                ("idempotent", e.value.to_string()),
                ("steps", e.steps.to_string()),
            ]);
            Ok(Output::ok(
                "idempotent",
                json!({"factor": pi.to_string(), "idempotent": e.value.to_string(), "digits": e.value.to_digit_arrays(), "steps": e.steps}),
                text,
            ))
        }
        Command::Crt { components } => {
            let codes = components
                .iter()
                .map(|p| parse_code(&read_source(p)?))
                .collect::<Result<Vec<_>, _>>()?;
            let pir = crt_combine(codes)?;
            let cl = pir.classify(search)?;
            let text = kv(&[
                ("m", pir.m().to_string()),
                ("rank", cl.rank.to_string()),
                ("d", cl.d.to_string()),
                ("free", cl.is_free.to_string()),
                ("self-dual", cl.is_self_dual.to_string()),
                ("mds", cl.is_mds.to_string()),
            ]) + &matrix_text(&pir.generator_matrix());
            Ok(Output::ok(
                "crt",
                json!({"code": pir, "generator": pir.generator_matrix(), "classification": cl}),
                text,
            ))
        }
        Command::Rs { n, d, m } => {
            let pir = rs_code(*n, *d, *m)?;
            let cl = pir.classify(search)?;
            if !cl.is_mds || cl.d != *d {
                return Err(Error::Verification(format!("RS code has d={} (mds={})", cl.d, cl.is_mds)).into());
            }
            let text = kv(&[("m", m.to_string()), ("d", cl.d.to_string()), ("mds", cl.is_mds.to_string())])
                + &matrix_text(&pir.generator_matrix());
            Ok(Output::ok(
                "rs",
                json!({"code": pir, "generator": pir.generator_matrix(), "classification": cl}),
                text,
            ))
        }
        Command::MdsExists { n, k, m } => {
            let a = mds_exists(*n, *k, *m)?;
            let text = match &a {
                MdsAnswer::Yes { certificates } => {
                    let mut t = "yes\n".to_string();
                    for c in certificates {
                        t.push_str(&format!("  F_{}: {} [{},{},{}]\n", c.p, c.construction, c.n, c.k, c.d));
                    }
                    t
                }
                MdsAnswer::No { p, reason } => format!("no (F_{p}): {reason}\n"),
                MdsAnswer::Unknown { p, reason } => format!("unknown (F_{p}): {reason}\n"),
            };
            Ok(Output::ok("mds-exists", serde_json::to_value(&a).unwrap(), text))
        }
        Command::Bound { n, k, m } => {
            let b = sufficiency_bound(*n, *k, *m)?;
            Ok(Output::ok("bound", json!({"holds": b}), format!("{b}\n")))
        }
        Command::Family { n, m, family } => {
            let (pir, cert) = zm_selfdual_mds(*n, *m, *family, search)?;
            let text = kv(&[
                ("n", n.to_string()),
                ("m", m.to_string()),
                ("d", cert.d.to_string()),
                ("self-dual", cert.is_self_dual.to_string()),
                ("mds", cert.is_mds.to_string()),
            ]) + &matrix_text(&cert.generator);
            Ok(Output::ok("family", json!({"certificate": cert, "code": pir}), text))
        }
        Command::Table1 { n, m } => {
            let entries: Vec<(usize, u64)> = match (n, m) {
                (Some(n), Some(m)) => vec![(*n, *m)],
                _ => TABLE1
                    .iter()
                    .filter(|(tn, _)| n.map_or(true, |n| n == *tn))
                    .flat_map(|(tn, ms)| {
                        ms.iter()
                            .filter(|&&tm| m.map_or(true, |m| m == tm))
                            .map(move |&tm| (*tn, tm))
                    })
                    .collect(),
            };
            if entries.is_empty() {
                return Err(Failure::Usage("no table entries match".into()));
            }
            let report = table1(&entries, search);
            let text = table1_text(&report);
            Ok(Output::ok("table1", json!({"entries": report}), text))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(t) = cli.threads {
        par::set_threads(t.max(1));
    }
    let search = Search {
        budget: cli.budget.unwrap_or_else(default_budget),
        strategy: Strategy::default(),
    };
    match run(&cli, search) {
        Ok(out) => {
            if cli.json {
                let mut v = json!({"schema": 1, "command": out.command});
                if let (Value::Object(dst), Value::Object(src)) = (&mut v, out.value) {
                    dst.extend(src);
                }
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            let code = exit_code(&e);
            if cli.json {
                let v = json!({"schema": 1, "error": e.to_string(), "exit": code});
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
