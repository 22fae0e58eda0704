use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use epoly_cli::{run, CommandRequest};

fn main() -> ExitCode {
    let request = CommandRequest::parse();
    let outcome = run(&request).and_then(|record| {
        let text = record.render(request.format)?;
        Ok((text, record.has_mismatch()))
    });
    match outcome {
        Ok((text, mismatch)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(6);
            }
            if mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
