// SPDX-License-Identifier: Apache-2.0
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diracconst::constants::{constant_report, Method, RunOptions, SumConfig, DEFAULT_TERM_CAP};
use diracconst::orbits::real_forms;
use diracconst::report::CaseReport;
use diracconst::{Error, Family, GroupCase};

mod render;
mod verify;

#[derive(Parser, Debug)]
#[command(name = "diracconst", version, about = "Exact constants for the real forms of classical nilpotent orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the real forms of the orbit with h-vectors, Dynkin labels and signed tableaux.
    RealForms {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the constant of one or all real forms.
    Constant {
        #[command(flatten)]
        case: CaseArgs,
        /// Form index (from 1) or "all".
        #[arg(long, default_value = "all")]
        form: FormSel,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
        /// Extra weights besides λ₀ for the brute-force sum.
        #[arg(long, default_value_t = 2)]
        extra_lambdas: usize,
    },
    /// Run the verification checks over every case up to a rank.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Summary table of closed forms and their values.
    Table {
        #[arg(long)]
        group: Option<Family>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct CaseArgs {
    #[arg(long)]
    group: Family,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

impl CaseArgs {
    fn case(&self) -> diracconst::Result<GroupCase> {
        GroupCase::from_parts(self.group, self.p, self.q, self.n)
    }
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_TERM_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    term_cap: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl RunArgs {
    fn options(&self, extra_lambdas: usize) -> RunOptions {
        RunOptions {
            sum: SumConfig { term_cap: self.term_cap, workers: self.workers as usize },
            seed: self.seed,
            extra_lambdas,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug)]
enum FormSel {
    All,
    One(usize),
}

impl std::str::FromStr for FormSel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(FormSel::All);
        }
        match s.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(FormSel::One(i)),
            _ => Err(format!("expected a form index ≥ 1 or \"all\", got '{s}'")),
        }
    }
}

/// Exit status for a library error: 1 for mathematical defects, 2 for usage and capacity.
fn error_status(e: &Error) -> u8 {
    match e {
        Error::NonIntegerQuotient(_) | Error::OrthogonalityViolated | Error::SigmaHypothesis(_) => 1,
        _ => 2,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_status(&e))
}

fn smallest_cases() -> Vec<GroupCase> {
    vec![
        GroupCase::su(1, 1).unwrap(),
        GroupCase::so_odd(1, 1).unwrap(),
        GroupCase::sp(1).unwrap(),
        GroupCase::so_even(1, 1).unwrap(),
        GroupCase::so_star(1).unwrap(),
    ]
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let (out, status) = match cli.command {
        Command::RealForms { case, format } => {
            let case = case.case()?;
            (render::real_forms(&case, &real_forms(&case)?, format)?, 0)
        }
        Command::Constant { case, form, method, format, run, extra_lambdas } => {
            let case = case.case()?;
            let method = match method {
                MethodArg::Brute => Method::Brute,
                MethodArg::Closed => Method::Closed,
                MethodArg::Both => Method::Both,
            };
            let indices: Vec<usize> = match form {
                FormSel::All => (1..=real_forms(&case)?.len()).collect(),
                FormSel::One(i) => vec![i],
            };
            let opts = run.options(extra_lambdas);
            let reports =
                indices.iter().map(|&i| constant_report(&case, i, method, &opts)).collect::<Result<Vec<_>, _>>()?;
            let doc = CaseReport::new(&case, &reports)?;
            let status = if doc.all_agree() == Some(false) { 1 } else { 0 };
            (render::constants(&case, &doc, format)?, status)
        }
        Command::Verify { max_rank, run, inject_fault } => {
            let summary = verify::run(max_rank, &run.options(2), inject_fault);
            (summary.to_json(), if summary.ok() { 0 } else { 1 })
        }
        Command::Table { group, p, q, n, format } => {
            let cases = match group {
                Some(f) => vec![GroupCase::from_parts(f, p, q, n)?],
                None if p.is_none() && q.is_none() && n.is_none() => smallest_cases(),
                None => return Err(Error::InvalidCase("--p/--q/--n require --group".into())),
            };
            (render::table(&cases, format)?, 0)
        }
    };
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(ExitCode::from(status))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(fail)
}
