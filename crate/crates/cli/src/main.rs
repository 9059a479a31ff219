mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::EvalArgs;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output;
    let outcome = match cli.command {
        Command::List { family } => commands::list(family, output),
        Command::Show { id } => commands::show(&id, output),
        Command::Verify { ids, all, digits, tolerance_exp } => {
            commands::verify(&ids, all, digits, tolerance_exp, output)
        }
        Command::Eval { family, m, x, p, q, r, digits, method, terms, levels, base } => commands::eval(
            EvalArgs { family, m, x, p, q, r, digits, method, terms, levels, base },
            output,
        ),
        Command::Pi { via, digits } => commands::pi(&via, digits, output),
        Command::Emit { ids, all, format, out } => commands::emit(&ids, all, format, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
