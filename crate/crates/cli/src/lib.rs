//! The `frobkit` command line: session files in, JSON documents out.

pub mod cache;
pub mod commands;
pub mod session;

use std::ffi::OsString;
use std::sync::Arc;

use clap::Parser;

use commands::{error_document, execute, render, Cli, Command};
use frobkit::groebner::{install_basis_store, BasisStore};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// What one invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_PARSE,
                    stdout: render(&error_document("usage", text.trim_end())),
                    stderr: text,
                },
            };
        }
    };

    let store: Option<Arc<dyn BasisStore>> = if cli.no_cache {
        None
    } else {
        cache::FileStore::from_env().map(|s| Arc::new(s) as Arc<dyn BasisStore>)
    };
    install_basis_store(store);

    let (code, doc) = match load_session(&cli) {
        Err((code, doc)) => (code, doc),
        Ok(session) => {
            if matches!(cli.command, Command::Fmt) {
                return emit(&cli, EXIT_OK, session.to_string());
            }
            match execute(&cli, &session) {
                Ok(doc) => (EXIT_OK, doc),
                Err(e) => (e.exit_code(), error_document(e.kind(), &e.to_string())),
            }
        }
    };
    emit(&cli, code, render(&doc))
}

fn load_session(cli: &Cli) -> Result<session::Session, (i32, serde_json::Value)> {
    let Some(path) = &cli.session else {
        return Err((EXIT_PARSE, error_document("usage", "--session <file> is required")));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_INPUT, error_document("io", &format!("{}: {e}", path.display()))))?;
    session::parse_session(&text).map_err(|e| (EXIT_PARSE, error_document("parse", &e.to_string())))
}

fn emit(cli: &Cli, code: i32, text: String) -> Outcome {
    if let Some(path) = &cli.json_out {
        if let Err(e) = std::fs::write(path, &text) {
            return Outcome {
                code: if code == EXIT_OK { EXIT_INPUT } else { code },
                stdout: String::new(),
                stderr: format!("cannot write {}: {e}\n", path.display()),
            };
        }
        return Outcome {
            code,
            stdout: String::new(),
            stderr: String::new(),
        };
    }
    Outcome {
        code,
        stdout: text,
        stderr: String::new(),
    }
}
