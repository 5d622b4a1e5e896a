//! Command-line front end: compute invariants, run verification suites,
//! dump representation data.
//!
//! Exit codes: 0 success, 1 usage or internal error, 2 the closure is not a
//! knot, 3 route disagreement, 4 dimension budget exceeded.

use crate::braid::{random_knot_braid, BraidWord};
use crate::homological::{
    check_budget, class_f0, class_g, default_budget, jones_global_capped,
    jones_homological_capped, jones_homological_with_pairing, HomError, PairingMatrix,
};
use crate::hwspace::{enumerate_partitions, lawrence_matrix, Partition};
use crate::quantum::{braiding_operator, jones_hw, jones_rt, ModuleSpec, TensorVector};
use crate::ring::{LaurentPoly, QR};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_A_KNOT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "cjones",
    about = "Coloured Jones polynomials of knots from braid words, by independent exact routes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the N-th coloured Jones polynomial of a braid closure.
    Compute(ComputeArgs),
    /// Run a verification suite; nonzero exit on any failure.
    Verify(VerifyArgs),
    /// Dump representation data as JSON.
    Tables(TablesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Route {
    Rt,
    Hw,
    Homological,
    Global,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Strand count of the braid group.
    #[arg(long)]
    strands: usize,
    /// Whitespace-separated signed generator indices, e.g. "1 1 1".
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    braid: String,
    /// The colour N >= 2.
    #[arg(long)]
    color: u16,
    #[arg(long, value_enum, default_value_t = Route::All)]
    route: Route,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Dimension cap for the homological routes (overrides JONES_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of: braid-relations, markov, routes, pairing.
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    max_strands: usize,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    #[arg(long, default_value_t = 3)]
    max_color: u16,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct TablesArgs {
    /// One of: lawrence, pairing, classes.
    what: String,
    /// Partition-set strand parameter n of E_{n,m}.
    #[arg(long)]
    n: usize,
    /// Weight m (defaults to n(N-1) for classes).
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    color: Option<u16>,
    /// Signed generator index for Lawrence matrices.
    #[arg(long, allow_hyphen_values = true)]
    gen: Option<i32>,
    #[arg(long)]
    budget: Option<u64>,
}

fn budget_of(flag: Option<u64>) -> u64 {
    flag.unwrap_or_else(default_budget)
}

fn exit_code_of(err: &HomError) -> i32 {
    match err {
        HomError::NotAKnot => EXIT_NOT_A_KNOT,
        HomError::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_ERROR,
    }
}

fn compute(args: &ComputeArgs) -> i32 {
    let braid = match BraidWord::parse(&args.braid, args.strands) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    if args.color < 2 {
        eprintln!("error: color must be at least 2");
        return EXIT_ERROR;
    }
    if !braid.is_knot() {
        eprintln!("error: the closure of this braid is not a knot");
        return EXIT_NOT_A_KNOT;
    }
    let cap = budget_of(args.budget);
    let routes: Vec<(&str, Result<LaurentPoly, HomError>)> = match args.route {
        Route::Rt => vec![("rt", jones_rt(&braid, args.color).map_err(hom_of_quantum))],
        Route::Hw => vec![("hw", jones_hw(&braid, args.color).map_err(hom_of_quantum))],
        Route::Homological => vec![(
            "homological",
            jones_homological_capped(&braid, args.color, cap),
        )],
        Route::Global => vec![("global", jones_global_capped(&braid, args.color, cap))],
        Route::All => vec![
            ("rt", jones_rt(&braid, args.color).map_err(hom_of_quantum)),
            ("hw", jones_hw(&braid, args.color).map_err(hom_of_quantum)),
            (
                "homological",
                jones_homological_capped(&braid, args.color, cap),
            ),
            ("global", jones_global_capped(&braid, args.color, cap)),
        ],
    };
    let mut results = Vec::new();
    for (name, r) in routes {
        match r {
            Ok(p) => results.push((name, p)),
            Err(e) => {
                eprintln!("error on route {name}: {e}");
                return exit_code_of(&e);
            }
        }
    }
    let (first_name, first) = &results[0];
    for (name, p) in &results[1..] {
        if p != first {
            eprintln!("route disagreement: {first_name} gives {first}, {name} gives {p}");
            return EXIT_DISAGREEMENT;
        }
    }
    let route_name = match args.route {
        Route::All => "all".to_string(),
        _ => results[0].0.to_string(),
    };
    match args.output {
        Output::Text => println!("{first}"),
        Output::Json => {
            let value = serde_json::json!({
                "schema": 1,
                "braid": braid.to_json(),
                "color": args.color,
                "route": route_name,
                "vars": ["q"],
                "result": first.to_json(),
            });
            println!("{value}");
        }
    }
    EXIT_OK
}

fn hom_of_quantum(e: crate::quantum::QuantumError) -> HomError {
    match e {
        crate::quantum::QuantumError::NotAKnot => HomError::NotAKnot,
        crate::quantum::QuantumError::BadColour => HomError::BadColour,
        crate::quantum::QuantumError::NonDivisible(r) => HomError::Ring(r),
    }
}

fn verify(args: &VerifyArgs) -> i32 {
    let ok = match args.suite.as_str() {
        "braid-relations" => verify_braid_relations(args),
        "markov" => verify_markov(args),
        "routes" => verify_routes(args),
        "pairing" => verify_pairing(args),
        other => {
            eprintln!("error: unknown suite {other:?} (braid-relations|markov|routes|pairing)");
            return EXIT_ERROR;
        }
    };
    if ok {
        println!("suite {}: ok", args.suite);
        EXIT_OK
    } else {
        eprintln!("suite {}: FAILED", args.suite);
        EXIT_ERROR
    }
}

fn verify_braid_relations(args: &VerifyArgs) -> bool {
    let mut ok = true;
    for colour in 2..=args.max_color {
        let op = braiding_operator(colour, 1);
        let spec = ModuleSpec::Colour(colour);
        let mut all = true;
        let dim = colour as usize;
        for flat in 0..dim.pow(3) {
            let idx = vec![
                (flat % dim) as u16,
                (flat / dim % dim) as u16,
                (flat / dim / dim) as u16,
            ];
            let v = TensorVector::basis(spec, vec![false; 3], idx);
            let lhs = op.apply(&op.apply(&op.apply(&v, 0), 1), 0);
            let rhs = op.apply(&op.apply(&op.apply(&v, 1), 0), 1);
            all &= lhs == rhs;
        }
        println!("  braiding relation on V_{colour}^3: {}", verdict(all));
        ok &= all;
    }
    for colour in 2..=args.max_color {
        for strands in 3..=args.max_strands.max(3) {
            for m in 1..=2u32 {
                let m1 = lawrence_matrix(1, strands, m, colour);
                let m2 = lawrence_matrix(2, strands, m, colour);
                let (Ok(m1), Ok(m2)) = (m1, m2) else {
                    ok = false;
                    continue;
                };
                let pass = m1.mul(&m2).mul(&m1).to_json() == m2.mul(&m1).mul(&m2).to_json();
                println!(
                    "  lawrence braid relation ({strands},{m}) colour {colour}: {}",
                    verdict(pass)
                );
                ok &= pass;
            }
        }
    }
    ok
}

fn verify_markov(args: &VerifyArgs) -> bool {
    let mut ok = true;
    for case in 0..10u64 {
        let strands = 2 + (case as usize % args.max_strands.saturating_sub(1).max(1));
        let b = random_knot_braid(strands, args.max_len.min(5), args.seed ^ case);
        for colour in 2..=args.max_color.min(3) {
            let Ok(j) = jones_rt(&b, colour) else {
                ok = false;
                continue;
            };
            let conj = b.markov_conjugate(1).unwrap();
            let pass = jones_rt(&conj, colour).as_ref() == Ok(&j)
                && jones_rt(&b.markov_stabilize(1), colour).as_ref() == Ok(&j)
                && jones_rt(&b.markov_stabilize(-1), colour).as_ref() == Ok(&j);
            println!(
                "  markov invariance braid \"{b}\" ({strands} strands) colour {colour}: {}",
                verdict(pass)
            );
            ok &= pass;
        }
    }
    ok
}

fn verify_routes(args: &VerifyArgs) -> bool {
    let cap = budget_of(args.budget);
    let mut ok = true;
    for case in 0..12u64 {
        let strands = 1 + (case as usize % args.max_strands);
        let b = random_knot_braid(strands, args.max_len, args.seed ^ (case << 8));
        for colour in 2..=args.max_color {
            if check_budget(2 * strands, strands as u32 * (colour as u32 - 1), cap).is_err() {
                continue;
            }
            let rt = jones_rt(&b, colour);
            let hw = jones_hw(&b, colour);
            let hom = jones_homological_capped(&b, colour, cap);
            let glob = jones_global_capped(&b, colour, cap);
            let pass = match (&rt, &hw, &hom, &glob) {
                (Ok(a), Ok(b2), Ok(c), Ok(d)) => a == b2 && b2 == c && c == d,
                _ => false,
            };
            println!(
                "  route agreement braid \"{b}\" ({strands} strands) colour {colour}: {}",
                verdict(pass)
            );
            ok &= pass;
        }
    }
    ok
}

fn verify_pairing(args: &VerifyArgs) -> bool {
    let cap = budget_of(args.budget);
    let golden = [
        BraidWord::parse("", 1).unwrap(),
        BraidWord::parse("1 1 1", 2).unwrap(),
        BraidWord::parse("-1 -1 -1", 2).unwrap(),
        BraidWord::parse("1 -2 1 -2", 3).unwrap(),
    ];
    let mut ok = true;
    for b in &golden {
        let reference = match jones_homological_capped(b, 2, cap) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("  reference failed on \"{b}\": {e}");
                return false;
            }
        };
        for round in 0..3u64 {
            let seed = args.seed ^ round;
            let randomized = jones_homological_with_pairing(b, 2, cap, &|e: &Partition| {
                random_nonzero_poly(seed, e)
            });
            let pass = randomized.as_ref() == Ok(&reference);
            println!(
                "  pairing robustness braid \"{b}\" randomization {round}: {}",
                verdict(pass)
            );
            ok &= pass;
        }
    }
    ok
}

fn random_nonzero_poly(seed: u64, e: &Partition) -> LaurentPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(
        seed ^ e.parts().iter().fold(11u64, |a, &p| a.wrapping_mul(31) + p as u64),
    );
    let mut p = LaurentPoly::zero(QR);
    while p.is_zero() {
        for _ in 0..3 {
            let exp = rng.gen_range(-3i64..=3);
            let coeff = rng.gen_range(-4i64..=4);
            p = p.add(&LaurentPoly::monomial(QR, &[exp], coeff));
        }
    }
    p
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn tables(args: &TablesArgs) -> i32 {
    let cap = budget_of(args.budget);
    match args.what.as_str() {
        "pairing" => {
            let m = args.m.unwrap_or(0);
            let matrix = PairingMatrix::new(args.n, m);
            let entries: Vec<serde_json::Value> = matrix
                .entries()
                .map(|(e, p)| {
                    serde_json::json!({
                        "partition": e.parts(),
                        "poly": p.to_string(),
                    })
                })
                .collect();
            let value = serde_json::json!({
                "schema": 1,
                "kind": "pairing",
                "n": args.n,
                "m": m,
                "vars": ["d"],
                "entries": entries,
            });
            println!("{value}");
            EXIT_OK
        }
        "lawrence" => {
            let (Some(colour), Some(generator), Some(m)) = (args.color, args.gen, args.m) else {
                eprintln!("error: lawrence tables need --m, --color and --gen");
                return EXIT_ERROR;
            };
            if let Err(e) = check_budget(args.n, m, cap) {
                eprintln!("error: {e}");
                return EXIT_BUDGET;
            }
            match lawrence_matrix(generator, args.n, m, colour) {
                Ok(matrix) => {
                    let index: Vec<serde_json::Value> = enumerate_partitions(args.n, m)
                        .iter()
                        .map(|e| serde_json::json!(e.parts()))
                        .collect();
                    let value = serde_json::json!({
                        "schema": 1,
                        "kind": "lawrence",
                        "strands": args.n,
                        "m": m,
                        "color": colour,
                        "generator": generator,
                        "vars": ["q"],
                        "index": index,
                        "matrix": matrix.to_json(),
                    });
                    println!("{value}");
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_ERROR
                }
            }
        }
        "classes" => {
            let Some(colour) = args.color else {
                eprintln!("error: classes tables need --color");
                return EXIT_ERROR;
            };
            let n = args.n;
            let m = n as u32 * (colour as u32 - 1);
            if let Err(e) = check_budget(2 * n, m, cap) {
                eprintln!("error: {e}");
                return EXIT_BUDGET;
            }
            let f = class_f0(n, colour);
            let g = class_g(n, colour);
            match (f, g) {
                (Ok(f), Ok(g)) => {
                    let render = |class: &crate::homological::HomClass| {
                        let items: Vec<serde_json::Value> = class
                            .partitions
                            .iter()
                            .zip(&class.coeffs)
                            .map(|(e, c)| {
                                serde_json::json!({
                                    "partition": e.parts(),
                                    "coeff": c.to_string(),
                                })
                            })
                            .collect();
                        serde_json::Value::Array(items)
                    };
                    let value = serde_json::json!({
                        "schema": 1,
                        "kind": "classes",
                        "n": n,
                        "color": colour,
                        "m": m,
                        "vars": ["q"],
                        "multifork": render(&f),
                        "barcode": render(&g),
                    });
                    println!("{value}");
                    EXIT_OK
                }
                (Err(e), _) | (_, Err(e)) => {
                    eprintln!("error: {e}");
                    exit_code_of(&e)
                }
            }
        }
        other => {
            eprintln!("error: unknown table {other:?} (lawrence|pairing|classes)");
            EXIT_ERROR
        }
    }
}

/// Entry point used by the `cjones` binary; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Tables(args) => tables(args),
    }
}

pub fn run_from_args() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_OK
            }
        }
    }
}

/// Test hook: run the CLI on an argument vector.
pub fn run_with<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(_) => EXIT_ERROR,
    }
}

