//! Command-line front end: every computation of the library plus a `verify`
//! command that runs the full identity suite.
//!
//! Partitions are written in brackets, `[3,1,1]`, with `[]` for the empty
//! diagram. Output is deterministic: expansion terms are printed in
//! reverse-lexicographic partition order, so identical inputs and flags give
//! byte-identical output. Exit status is 0 on success, 1 when a verification
//! suite fails (or on an internal invariant violation), and 2 on malformed
//! input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use fusionring::exec::ExecMode;
use fusionring::grothendieck::{self, GrothendieckElement};
use fusionring::partition::Partition;
use fusionring::symfunc::SchurExpansion;
use fusionring::verify::{run_all, VerifyOptions};
use fusionring::{genfun, lr, pairings, plethysm};

#[derive(Parser)]
#[command(
    name = "fusionring",
    version,
    about = "Exact fusion rules, characters and basis changes for a Young-diagram-indexed fusion ring"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Persistent Littlewood-Richardson cache file (loaded before, written
    /// back after the command)
    #[arg(long, global = true, env = "FUSIONRING_LR_CACHE")]
    lr_cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PieriKind {
    Row,
    Column,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripOp {
    Add,
    Remove,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripDirection {
    Horizontal,
    Vertical,
}

#[derive(Subcommand)]
enum Command {
    /// Fusion product of two simple classes in the X basis
    Fuse {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
    },
    /// Character of a simple class as a Schur expansion
    Char {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// A simple class X_λ expressed in the Y basis
    X2y {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// A class Y_λ expressed in the X basis
    Y2x {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// A single Littlewood-Richardson coefficient c_{mu,nu}^lambda
    Lr {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Pieri product: h_r·s_mu (row) or e_r·s_mu (column)
    Pieri {
        #[arg(value_enum)]
        kind: PieriKind,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        r: usize,
    },
    /// Plethysm outer[inner]; operands are h<r>, e<r> or s[parts]
    Plethysm {
        #[arg(value_parser = parse_operand)]
        outer: SchurExpansion,
        #[arg(value_parser = parse_operand)]
        inner: SchurExpansion,
    },
    /// Horizontal/vertical strip additions or removals
    Strips {
        #[arg(value_enum)]
        op: StripOp,
        #[arg(value_enum)]
        direction: StripDirection,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        n: usize,
    },
    /// Enumerate pairings of 2n points with their transversal/ideal split
    Pairings {
        n: usize,
        /// Print every pairing, not just the counts
        #[arg(long)]
        list: bool,
    },
    /// Generating-function checks at a truncation: character sum vs product
    /// side, Cauchy and dual Cauchy
    Genfun {
        n_x: usize,
        n_y: usize,
        degree: usize,
        /// Also dump the expanded series coefficients
        #[arg(long)]
        dump: bool,
    },
    /// Run the full identity suite and print a per-suite pass/fail table
    Verify {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Parses a plethysm operand: `h<r>`, `e<r>` or a Schur function `s[parts]`.
fn parse_operand(s: &str) -> Result<SchurExpansion, String> {
    if let Some(rest) = s.strip_prefix('h') {
        if let Ok(r) = rest.parse::<usize>() {
            return Ok(SchurExpansion::complete(r));
        }
    }
    if let Some(rest) = s.strip_prefix('e') {
        if let Ok(r) = rest.parse::<usize>() {
            return Ok(SchurExpansion::elementary(r));
        }
    }
    if let Some(rest) = s.strip_prefix('s') {
        let lambda = parse_partition(rest)?;
        return Ok(SchurExpansion::schur(lambda));
    }
    Err(format!(
        "invalid operand {s:?}: expected h<r>, e<r> or s[parts]"
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("fusionring: internal invariant violation");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> ExitCode {
    if let Some(path) = &cli.lr_cache {
        match lr::load_cache_file(path) {
            Ok(_) => {}
            Err(lr::CacheError::Io(_)) => {} // cold cache
            Err(err @ lr::CacheError::Corrupt { .. }) => {
                eprintln!("fusionring: ignoring corrupt cache: {err}");
            }
        }
    }

    let code = dispatch(cli);

    if let Some(path) = &cli.lr_cache {
        if let Err(e) = lr::save_cache_file(path) {
            eprintln!("fusionring: could not write cache {}: {e}", path.display());
        }
    }
    code
}

fn print_element(format: Format, el: &GrothendieckElement) {
    match format {
        Format::Text => println!("{el}"),
        Format::Json => println!("{}", el.to_json()),
    }
}

fn print_schur(format: Format, f: &SchurExpansion) {
    match format {
        Format::Text => println!("{f}"),
        Format::Json => println!("{}", f.to_json()),
    }
}

fn dispatch(cli: &Cli) -> ExitCode {
    let format = cli.format;
    match &cli.command {
        Command::Fuse { mu, nu } => {
            print_element(format, &grothendieck::fuse_closed(mu, nu));
        }
        Command::Char { lambda } => {
            print_schur(format, &grothendieck::char_x(lambda));
        }
        Command::X2y { lambda } => {
            print_element(format, &grothendieck::x_to_y(lambda));
        }
        Command::Y2x { lambda } => {
            print_element(format, &grothendieck::y_to_x(lambda));
        }
        Command::Lr { mu, nu, lambda } => {
            let c = lr::coefficient(mu, nu, lambda);
            match format {
                Format::Text => println!("{c}"),
                Format::Json => println!("{}", json!({ "coefficient": c.to_string() })),
            }
        }
        Command::Pieri { kind, mu, r } => {
            let expansion = match kind {
                PieriKind::Row => lr::pieri_row(mu, *r),
                PieriKind::Column => lr::pieri_column(mu, *r),
            };
            print_schur(format, &expansion);
        }
        Command::Plethysm { outer, inner } => match plethysm::plethysm(outer, inner) {
            Ok(result) => print_schur(format, &result),
            Err(e) => return usage_error(&e.to_string()),
        },
        Command::Strips {
            op,
            direction,
            mu,
            n,
        } => {
            let mut strips = match (op, direction) {
                (StripOp::Add, StripDirection::Horizontal) => mu.add_horizontal_strips(*n),
                (StripOp::Add, StripDirection::Vertical) => mu.add_vertical_strips(*n),
                (StripOp::Remove, StripDirection::Horizontal) => mu.remove_horizontal_strips(*n),
                (StripOp::Remove, StripDirection::Vertical) => mu.remove_vertical_strips(*n),
            };
            strips.sort_by(|a, b| b.cmp(a));
            match format {
                Format::Text => {
                    for lam in &strips {
                        println!("{lam}");
                    }
                }
                Format::Json => {
                    let parts: Vec<_> = strips.iter().map(|lam| lam.parts().to_vec()).collect();
                    println!("{}", json!({ "partitions": parts }));
                }
            }
        }
        Command::Pairings { n, list } => {
            let all = pairings::enumerate_pairings(*n);
            let classified: Vec<(String, bool)> = all
                .iter()
                .map(|p| {
                    let transversal = pairings::classify(p) == pairings::PairingClass::Transversal;
                    (p.to_string(), transversal)
                })
                .collect();
            let transversal = classified.iter().filter(|(_, t)| *t).count();
            match format {
                Format::Text => {
                    if *list {
                        for (text, t) in &classified {
                            let class = if *t { "transversal" } else { "ideal" };
                            println!("{text}  {class}");
                        }
                    }
                    println!(
                        "n={n}: {} pairings, {} transversal, {} ideal",
                        all.len(),
                        transversal,
                        all.len() - transversal
                    );
                }
                Format::Json => {
                    let mut value = json!({
                        "n": n,
                        "total": all.len(),
                        "transversal": transversal,
                        "ideal": all.len() - transversal,
                    });
                    if *list {
                        value["pairings"] = json!(classified
                            .iter()
                            .map(|(text, t)| json!({
                                "pairing": text,
                                "class": if *t { "transversal" } else { "ideal" },
                            }))
                            .collect::<Vec<_>>());
                    }
                    println!("{value}");
                }
            }
        }
        Command::Genfun {
            n_x,
            n_y,
            degree,
            dump,
        } => {
            return genfun_command(format, *n_x, *n_y, *degree, *dump);
        }
        Command::Verify {
            max_size,
            max_degree,
        } => {
            let opts = VerifyOptions {
                max_size: *max_size,
                max_degree: *max_degree,
                mode: ExecMode::default(),
            };
            let reports = run_all(&opts);
            let all_passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Text => {
                    for r in &reports {
                        println!("{r}");
                    }
                    println!(
                        "{}",
                        if all_passed {
                            "all suites passed"
                        } else {
                            "FAILURES"
                        }
                    );
                }
                Format::Json => {
                    let value = json!(reports
                        .iter()
                        .map(|r| json!({
                            "suite": r.name,
                            "passed": r.passed,
                            "detail": r.detail,
                            "millis": r.millis,
                        }))
                        .collect::<Vec<_>>());
                    println!("{value}");
                }
            }
            if !all_passed {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}

fn genfun_command(format: Format, n_x: usize, n_y: usize, degree: usize, dump: bool) -> ExitCode {
    let sum = genfun::expand_sum_side(n_x, n_y, degree);
    let product = genfun::expand_product_side(n_x, n_y, degree);
    let checks = [
        ("character-generating-function", sum == product),
        ("cauchy", genfun::check_cauchy(n_x, n_y, degree, false)),
        ("dual-cauchy", genfun::check_cauchy(n_x, n_y, degree, true)),
    ];
    let all_passed = checks.iter().all(|(_, ok)| *ok);
    match format {
        Format::Text => {
            for (name, ok) in &checks {
                println!("{}  {name}", if *ok { "PASS" } else { "FAIL" });
            }
            if dump {
                for ((ex, ey), c) in sum.terms() {
                    println!("{c} * x{ex:?} y{ey:?}");
                }
            }
        }
        Format::Json => {
            let mut value = json!({
                "n_x": n_x, "n_y": n_y, "degree": degree,
                "checks": checks
                    .iter()
                    .map(|(name, ok)| json!({ "check": name, "passed": ok }))
                    .collect::<Vec<_>>(),
            });
            if dump {
                value["terms"] = json!(sum
                    .terms()
                    .map(|((ex, ey), c)| json!({
                        "x": ex, "y": ey, "coefficient": c.to_string(),
                    }))
                    .collect::<Vec<_>>());
            }
            println!("{value}");
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("fusionring: {message}");
    ExitCode::from(2)
}
