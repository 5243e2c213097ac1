//! Command-line front end for `grover-ent`.
//!
//! Exit codes: 0 when every check holds, 1 when a verification fails, 2 for
//! usage errors, 3 for I/O errors.

pub mod args;
pub mod commands;
pub mod csv_out;

use std::ffi::OsString;
use std::io::{self, Write};

pub use args::{parse_args, RunConfig, UsageError};
pub use commands::{execute, RunError, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Parses `argv`, runs it, and returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match parse_args(argv) {
        Ok(cfg) => cfg,
        Err(UsageError::Clap { text, is_help: true }) => {
            print!("{text}");
            return EXIT_OK;
        }
        Err(UsageError::Clap { text, .. }) => {
            eprint!("{text}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    // CSV owns stdout unless it goes to a file.
    let result = if cfg.out.is_some() {
        execute(&cfg, &mut io::stdout().lock())
    } else {
        execute(&cfg, &mut io::stderr().lock())
    };
    let _ = io::stdout().flush();
    match result {
        Ok(Verdict::Pass) => EXIT_OK,
        Ok(Verdict::Fail) => EXIT_VERIFY,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                RunError::Io(_) | RunError::Emit(_) => EXIT_IO,
                RunError::Library(_) => EXIT_USAGE,
            }
        }
    }
}
