//! `gcflab`: exact continued fraction experiments on the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "gcflab",
    version,
    about = "Continued fractions over substitution sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convergents p_n/q_n of the continued fraction.
    Convergents {
        #[command(flatten)]
        input: InputArgs,
        /// Last index n.
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Gcd, coefficient products and irrationality measure diagnostics.
    Diagnose {
        #[command(flatten)]
        input: InputArgs,
        /// Last index n, at least 2.
        #[arg(long, default_value_t = 200)]
        depth: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Raney transducers on 2x2 nonnegative matrices.
    Raney {
        #[command(subcommand)]
        command: RaneyCommand,
    },
    /// Regular continued fraction quotients of the folding constant.
    Rcf {
        /// Folding generation g; the word has length 2^(g+1) - 1.
        #[arg(long)]
        foldings: usize,
        #[arg(long, default_value = "a=1,b=3")]
        assign: String,
        /// Enclosure depth of the interval arm.
        #[arg(long, default_value_t = 4096)]
        depth: usize,
        /// Also run the interval arm and compare.
        #[arg(long)]
        crosscheck: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Prefixes w of a fixed point with w^r also a prefix.
    Stammer {
        #[arg(long, default_value = "a->ab;b->aa")]
        rule: String,
        #[arg(long, default_value_t = 'a')]
        seed: char,
        /// Number of letters scanned.
        #[arg(long, default_value_t = 4096)]
        length: usize,
        /// Exponent r > 1, as p/q or an integer.
        #[arg(long, default_value = "4/3")]
        exponent: String,
        /// Shortest w reported.
        #[arg(long, default_value_t = 1)]
        min_len: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Quadratic of the period-k continuation and its positive root.
    Quadratic {
        #[command(flatten)]
        input: InputArgs,
        /// Period k of the continuation.
        #[arg(long)]
        period: usize,
        #[arg(long, value_enum, default_value_t = Form::FixedPoint)]
        form: Form,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
enum RaneyCommand {
    /// Doubly balanced configurations of a determinant.
    States {
        #[arg(long)]
        det: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Transducer edges between states.
    Table {
        #[arg(long)]
        det: u64,
        /// Longest input word searched per edge.
        #[arg(long, default_value_t = 16)]
        max_input: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Feeds an L/R word through a configuration.
    Run {
        #[arg(long)]
        det: u64,
        /// Matrix literal a,b,c,d.
        #[arg(long)]
        state: String,
        /// Word like RLLR or RL^4R.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// A substitution read through a numeric assignment.
#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long, default_value = "a->ab;b->aa")]
    rule: String,
    #[arg(long, default_value = "a=1,b=3")]
    assign: String,
    #[arg(long, default_value_t = 'a')]
    seed: char,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// dot is accepted by `raney table` only.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Form {
    FixedPoint,
    ConvergentForm,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, out) = match dispatch(cli.command) {
        Ok(done) => done,
        Err(failure) => return failure.report(),
    };
    match output::emit(&text.body, out.out.as_deref()) {
        Ok(()) if text.disagreement => {
            eprintln!("error: the two arms disagree");
            ExitCode::from(1)
        }
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => failure.report(),
    }
}

fn dispatch(command: Command) -> Result<(output::Rendered, OutputArgs), Failure> {
    use commands::*;
    Ok(match command {
        Command::Convergents { input, depth, out } => {
            (convergents(&input, depth, out.format)?, out)
        }
        Command::Diagnose { input, depth, out } => (diagnose(&input, depth, out.format)?, out),
        Command::Raney { command } => match command {
            RaneyCommand::States { det, out } => (raney_states(det, out.format)?, out),
            RaneyCommand::Table {
                det,
                max_input,
                out,
            } => (raney_table(det, max_input, out.format)?, out),
            RaneyCommand::Run {
                det,
                state,
                input,
                out,
            } => (raney_run(det, &state, &input, out.format)?, out),
        },
        Command::Rcf {
            foldings,
            assign,
            depth,
            crosscheck,
            out,
        } => (rcf(foldings, &assign, depth, crosscheck, out.format)?, out),
        Command::Stammer {
            rule,
            seed,
            length,
            exponent,
            min_len,
            out,
        } => (
            stammer(&rule, seed, length, &exponent, min_len, out.format)?,
            out,
        ),
        Command::Quadratic {
            input,
            period,
            form,
            out,
        } => (quadratic(&input, period, form, out.format)?, out),
    })
}
