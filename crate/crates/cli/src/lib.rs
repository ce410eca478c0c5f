//! Command-line front end for `binet-core`.
//!
//! [`run_command`] parses an argument vector, dispatches to the library and
//! renders the result as plain text, JSON or CSV. It never exits the process,
//! so tests can drive it directly.

mod args;
mod commands;
mod render;

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use render::Rendered;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Exit status plus whatever the command printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Domain(String),
}

impl From<binet_core::GoldenError> for CliError {
    fn from(e: binet_core::GoldenError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput::fail(EXIT_USAGE, text)
            } else {
                CommandOutput::ok(text)
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(rendered) => {
            let stdout = match rendered.render(cli.format) {
                Ok(s) => s,
                Err(e) => return CommandOutput::fail(EXIT_DOMAIN, format!("error: {e}\n")),
            };
            CommandOutput {
                code: if rendered.verification_failed {
                    EXIT_VERIFY
                } else {
                    EXIT_OK
                },
                stdout,
                stderr: String::new(),
            }
        }
        Err(CliError::Usage(msg)) => {
            CommandOutput::fail(EXIT_USAGE, format!("usage error: {msg}\n"))
        }
        Err(CliError::Domain(msg)) => CommandOutput::fail(EXIT_DOMAIN, format!("error: {msg}\n")),
    }
}
