use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use ratiomax_cli::args::{Cli, Command};
use ratiomax_cli::commands::{
    batch_report, certify_report, generate_report, solve_report, SolveOptions,
};
use ratiomax_cli::io::{write_atomic, CliError, InstanceFile};

fn run(cli: &Cli) -> Result<(String, i32, Option<&Path>), CliError> {
    match &cli.command {
        Command::Certify(args) => {
            let file = InstanceFile::load(&args.instance)?;
            let (report, code) =
                certify_report(&file, &args.instance.display().to_string(), args.tolerance)?;
            Ok((report, code, args.output.as_deref()))
        }
        Command::Solve(args) => {
            let file = InstanceFile::load(&args.instance)?;
            let opts = SolveOptions {
                method: args.method,
                tolerance: args.tolerance,
                delta: args.delta,
                seed: args.seed,
            };
            let (report, code) = solve_report(&file, &args.instance.display().to_string(), &opts)?;
            Ok((report, code, args.output.as_deref()))
        }
        Command::Generate(args) => {
            let spec = args.to_spec()?;
            let (json, code) = generate_report(&spec, args.seed)?;
            Ok((json, code, args.output.as_deref()))
        }
        Command::Batch(args) => {
            let spec = args.gen.to_spec()?;
            let (report, code) = batch_report(
                &spec,
                args.gen.seed,
                args.count,
                args.method,
                args.tolerance,
            )?;
            Ok((report, code, args.gen.output.as_deref()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                // Bad arguments are input errors.
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, code, output)) => {
            if let Some(path) = output {
                if let Err(err) = write_atomic(path, &text) {
                    eprintln!("error: {err}");
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
