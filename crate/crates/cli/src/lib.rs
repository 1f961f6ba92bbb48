//! Command-line front end for `ehrhart-core`: argument parsing, the
//! serializable report model, and JSON / markdown rendering.

pub mod commands;
pub mod markdown;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{execute, Cli, CliError, Command, Format, Status};
pub use report::ReportDocument;

/// What the process should print and how it should exit.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Markdown => markdown::render(doc),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    status: Status::InputError as i32,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    status: Status::Success as i32,
                }
            };
        }
    };
    let echoed = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(&cli, echoed) {
        Ok((doc, status)) => Outcome {
            stdout: render(&doc, cli.format),
            stderr: String::new(),
            status: status as i32,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status: e.status as i32,
        },
    }
}
