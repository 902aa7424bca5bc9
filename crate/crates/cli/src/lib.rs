//! Expression language and command-line front end for `symfun`.

pub mod app;
pub mod eval;
pub mod output;
pub mod parse;

pub use app::{Cli, Command, Format};
pub use eval::{eval_in, eval_str, ErrorKind, EvalError, Value};
pub use output::{render_json, render_text, JsonElement};
pub use parse::{parse, Expr, ParseError};
