//! Command-line interface: expression evaluation through the engine's
//! operations, and the verification harness.

use std::process::ExitCode;

use hqc::algebra::Element;
use hqc::calculus::{cartan_maurer, differential, FORM_NAMES};
use hqc::dual::chi;
use hqc::expr::parse_element;
use hqc::hopf::{adjoint, antipode, delta, epsilon};
use hqc::ideal::IdealGenerators;
use hqc::run_suite;

const USAGE: &str = "\
usage: hqc <command> [args]

commands:
  normal-form <expr>       canonical PBW form of an algebra expression
  delta <expr>             coproduct, in A (x) A
  epsilon <expr>           counit
  antipode <expr>          antipode
  adjoint <expr>           adjoint action, in A (x) A
  reduce <expr> [--trace]  class modulo the invariant right ideal, with an
                           optional certified rewrite trace
  d <expr>                 differential, as a left-coefficient 1-form
  chi <a|b|d> <expr>       tangent functional applied to an expression
  cartan-maurer            d of the three invariant 1-forms
  verify [--suite <hopf|ideal|calculus|dual|all>] [--max-degree <N>]
         [--format <text|json>] [--stable]
                           run verifier suites (defaults: all, degree 4;
                           HQC_MAX_DEGREE overrides the default degree;
                           --stable omits the wall-time field)

expressions (whitespace-insensitive, noncommutative products left-to-right):
  expr := ['-'] term (('+'|'-') term)*      term := factor ('*' factor)*
  factor := atom ['^' n]                    atom := rational | i | l |
                                            a|alpha | b|beta | d|delta | '(' expr ')'

exit codes: 0 success / all checks pass (paper-discrepancies allowed),
            1 verification failure, 2 usage or parse error";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("hqc: {msg}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

fn parse_arg(src: &str) -> Result<Element, String> {
    parse_element(src).map_err(|e| e.to_string())
}

fn one_expr<'a>(args: &'a [String], command: &str) -> Result<&'a str, String> {
    match args {
        [x] => Ok(x),
        _ => Err(format!("{command} expects exactly one expression argument")),
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(command) = args.first() else {
        return Err("no command given".to_string());
    };
    let rest = &args[1..];
    match command.as_str() {
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        "normal-form" => {
            let x = parse_arg(one_expr(rest, "normal-form")?)?;
            println!("{x}");
            Ok(ExitCode::SUCCESS)
        }
        "delta" => {
            let x = parse_arg(one_expr(rest, "delta")?)?;
            println!("{}", delta(&x));
            Ok(ExitCode::SUCCESS)
        }
        "epsilon" => {
            let x = parse_arg(one_expr(rest, "epsilon")?)?;
            println!("{}", epsilon(&x).canonical_text());
            Ok(ExitCode::SUCCESS)
        }
        "antipode" => {
            let x = parse_arg(one_expr(rest, "antipode")?)?;
            println!("{}", antipode(&x));
            Ok(ExitCode::SUCCESS)
        }
        "adjoint" => {
            let x = parse_arg(one_expr(rest, "adjoint")?)?;
            println!("{}", adjoint(&x));
            Ok(ExitCode::SUCCESS)
        }
        "reduce" => {
            let (src, trace) = match rest {
                [x] => (x.as_str(), false),
                [x, f] if f == "--trace" => (x.as_str(), true),
                [f, x] if f == "--trace" => (x.as_str(), true),
                _ => return Err("reduce expects <expr> [--trace]".to_string()),
            };
            let x = parse_arg(src)?;
            let ideal = IdealGenerators::ad_invariant();
            let reduction = ideal.reduce_traced(&x);
            println!("{}", reduction.class);
            if trace {
                if reduction.trace.is_empty() {
                    println!("trace: (no rewrite steps)");
                } else {
                    println!("trace:");
                    for step in &reduction.trace {
                        println!(
                            "  {} * ({}) * {}",
                            step.coefficient.canonical_text(),
                            ideal.generators()[step.generator_index],
                            step.cofactor
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "d" => {
            let x = parse_arg(one_expr(rest, "d")?)?;
            println!("{}", differential(&x));
            Ok(ExitCode::SUCCESS)
        }
        "chi" => {
            let [letter, src] = rest else {
                return Err("chi expects <a|b|d> <expr>".to_string());
            };
            let i = match letter.as_str() {
                "a" | "alpha" => 0,
                "b" | "beta" => 1,
                "d" | "delta" => 2,
                other => return Err(format!("unknown functional index {other:?}")),
            };
            let x = parse_arg(src)?;
            println!("{}", chi(i).apply(&x).canonical_text());
            Ok(ExitCode::SUCCESS)
        }
        "cartan-maurer" => {
            if !rest.is_empty() {
                return Err("cartan-maurer takes no arguments".to_string());
            }
            for (name, dw) in FORM_NAMES.iter().zip(cartan_maurer()) {
                println!("d({name}) = {dw}");
            }
            Ok(ExitCode::SUCCESS)
        }
        "verify" => verify(rest),
        other => Err(format!("unknown command {other:?}")),
    }
}

fn verify(args: &[String]) -> Result<ExitCode, String> {
    let mut suite = "all".to_string();
    let mut max_degree: Option<u32> = None;
    let mut format = "text".to_string();
    let mut stable = false;
    let mut it = args.iter();
    while let Some(flag) = it.next() {
        match flag.as_str() {
            "--suite" => suite = it.next().ok_or("--suite needs a value")?.clone(),
            "--max-degree" => {
                let v = it.next().ok_or("--max-degree needs a value")?;
                max_degree = Some(
                    v.parse()
                        .map_err(|_| format!("invalid --max-degree value {v:?}"))?,
                );
            }
            "--format" => format = it.next().ok_or("--format needs a value")?.clone(),
            "--stable" => stable = true,
            other => return Err(format!("unknown verify flag {other:?}")),
        }
    }
    if format != "text" && format != "json" {
        return Err(format!("unknown format {format:?} (expected text or json)"));
    }
    let max_degree = match max_degree {
        Some(n) => n,
        None => match std::env::var("HQC_MAX_DEGREE") {
            Ok(v) => v
                .parse()
                .map_err(|_| format!("invalid HQC_MAX_DEGREE value {v:?}"))?,
            Err(_) => 4,
        },
    };
    let mut report = run_suite(&suite, max_degree).ok_or_else(|| {
        format!("unknown suite {suite:?} (expected hopf, ideal, calculus, dual, all)")
    })?;
    if stable {
        report.wall_ms = None;
    }
    match format.as_str() {
        "json" => println!("{}", report.render_json()),
        _ => print!("{}", report.render_text()),
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
