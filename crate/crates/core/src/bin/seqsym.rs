use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use seqsym::render::brace_list;
use seqsym::{
    apply_map, jacobi, mult_perm, render_residue, render_sign, run_check, Check, DihedralElement, Error, JacobiMap,
    ParamRange, RenderFormat, ResidueMatrix,
};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "seqsym", version, about = "Sequential matrices, dihedral symmetries and Jacobi symbols modulo n^2+1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignMap {
    Jacobi,
    None,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n x n sequential matrix Q_n
    Gen {
        n: usize,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Print sigma(Q_n), or sigma((Q_n/m)) with --map jacobi
    Sym {
        n: usize,
        #[arg(value_parser = parse_element)]
        sigma: DihedralElement,
        #[arg(long, value_enum, default_value = "none")]
        map: SignMap,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Print the Jacobi symbol (a/m)
    Jacobi {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        m: u64,
    },
    /// Compare (a/m) with the signature of x -> a x on Z/mZ
    Zolotarev {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        m: u64,
    },
    /// Check an identity over a whole parameter range
    Verify {
        #[arg(value_parser = parse_check)]
        check: Check,
        /// Inclusive range such as 1..512
        #[arg(value_parser = parse_range)]
        range: ParamRange,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Emit the report as JSON
        #[arg(long)]
        json_report: bool,
    },
}

fn parse_format(s: &str) -> Result<RenderFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_element(s: &str) -> Result<DihedralElement, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<ParamRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen { n, format } => {
            print!("{}", render_residue(&ResidueMatrix::sequential(n)?, format)?);
        }
        Command::Sym { n, sigma, map, format } => {
            let q = ResidueMatrix::sequential(n)?;
            match map {
                SignMap::None => print!("{}", render_residue(&q.apply(sigma), format)?),
                SignMap::Jacobi => {
                    let phi = JacobiMap::new(q.modulus())?;
                    print!("{}", render_sign(&apply_map(&phi, &q.apply(sigma))?, format));
                }
            }
        }
        Command::Jacobi { a, m } => println!("{}", jacobi(a, m)?.to_i8()),
        Command::Zolotarev { a, m } => {
            let symbol = jacobi(a, m)?;
            let perm = mult_perm(a, m)?;
            let dec = perm.cycles();
            let multiset: Vec<String> = dec.length_multiset().iter().map(|(len, k)| format!("{len}^{k}")).collect();
            let sign = perm.signature();
            println!("jacobi: {symbol}");
            println!("signature: {sign}");
            println!("cycles: {}", brace_list(&dec.lengths()));
            println!("cycle_type: {}", multiset.join(" "));
            println!("agree: {}", symbol == sign);
            if symbol != sign {
                return Ok(EXIT_FAILED);
            }
        }
        Command::Verify { check, range, workers, json_report } => {
            let report = run_check(check, range, workers.max(1))?;
            if json_report {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if !report.passed() {
                return Ok(EXIT_FAILED);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
