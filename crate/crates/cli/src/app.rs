//! Command-line definition and dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symfun::llt::{generalized_kostka, llt_h};
use symfun::{
    kostka_poly, partitions, rc_list, ribbon_tableaux, ssyt_list, Partition, SymRing, VarNames,
};

use crate::eval::{eval_str, is_internal, promote, ErrorKind, EvalError};
use crate::output::{render_json, render_text};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "symfun", version, about = "Symmetric functions over Q(q,t)")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Display names for q and t, e.g. `x,y`.
    #[arg(long, global = true, value_name = "Q,T", value_parser = parse_var_names)]
    pub var_names: Option<VarNames>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression, e.g. `to_m(QP[2,1])`.
    Eval {
        expr: String,
        /// Convert the result to this basis.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Partitions of n, lexicographically decreasing.
    Partitions { n: usize },
    /// Semistandard tableaux of a shape and content, with charge.
    Tableaux { shape: String, content: String },
    /// k-ribbon tableaux of a shape and weight, with spin.
    Ribbons { shape: String, weight: String, k: usize },
    /// Rigged configurations, with cocharge.
    Rc { lambda: String, mu: String },
    /// Kostka-Foulkes polynomial K_{lambda mu}(t).
    Kostka { lambda: String, mu: String },
    /// Generalized Kostka polynomial K^(k)_{lambda mu}(t).
    Genkostka { lambda: String, mu: String, k: usize },
    /// The ribbon generating function H^(k)_lambda.
    Llt {
        lambda: String,
        k: usize,
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// Registered bases and operators.
    Bases,
}

fn parse_var_names(s: &str) -> Result<VarNames, String> {
    match s.split(',').map(str::trim).collect::<Vec<_>>()[..] {
        [q, t] if !q.is_empty() && !t.is_empty() => Ok(VarNames {
            q: q.to_string(),
            t: t.to_string(),
        }),
        _ => Err(format!("expected two comma-separated names, got `{s}`")),
    }
}

/// `4,3,2`, optionally bracketed; empty text or `[]` is the empty sequence.
pub fn parse_parts(s: &str) -> Result<Vec<u32>, String> {
    let inner = s
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')'])
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| format!("malformed partition `{s}`"))
        })
        .collect()
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

/// Rendered output of a command in both formats.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
}

fn user(message: impl Into<String>) -> EvalError {
    EvalError {
        kind: ErrorKind::User,
        message: message.into(),
        snippet: None,
    }
}

fn core(e: symfun::Error) -> EvalError {
    EvalError {
        kind: if is_internal(&e) { ErrorKind::Internal } else { ErrorKind::User },
        message: e.to_string(),
        snippet: None,
    }
}

fn blocks(items: impl IntoIterator<Item = (String, Vec<String>)>) -> String {
    let parts: Vec<String> = items
        .into_iter()
        .map(|(head, lines)| format!("{head}\n{}", lines.join("\n")))
        .collect();
    parts.join("\n\n")
}

pub fn run(ring: &SymRing, cmd: &Command, names: &VarNames) -> Result<Report, EvalError> {
    let part = |s: &str| parse_partition(s).map_err(user);
    let parts = |s: &str| parse_parts(s).map_err(user);
    match cmd {
        Command::Eval { expr, basis } => {
            let mut v = eval_str(ring, expr)?;
            if let Some(b) = basis {
                let to = ring.basis(b).map_err(core)?;
                let f = ring.convert(&promote(v, &to), &to).map_err(core)?;
                v = crate::eval::Value::Element(f);
            }
            Ok(Report {
                text: render_text(&v, names),
                json: render_json(&v),
            })
        }
        Command::Partitions { n } => {
            let ps = partitions(*n);
            Ok(Report {
                text: ps.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
                json: json!(ps.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>()),
            })
        }
        Command::Tableaux { shape, content } => {
            let content = parts(content)?;
            let ts = ssyt_list(&part(shape)?, &content).map_err(core)?;
            let charges: Vec<Option<usize>> = ts.iter().map(|t| t.charge().ok()).collect();
            let head = |c: &Option<usize>| match c {
                Some(c) => format!("charge = {c}"),
                None => "charge undefined (content is not a partition)".to_string(),
            };
            Ok(Report {
                text: blocks(ts.iter().zip(&charges).map(|(t, c)| (head(c), t.render()))),
                json: json!(ts
                    .iter()
                    .zip(&charges)
                    .map(|(t, c)| json!({ "rows": t.rows(), "charge": c }))
                    .collect::<Vec<_>>()),
            })
        }
        Command::Ribbons { shape, weight, k } => {
            let ts = ribbon_tableaux(&part(shape)?, &parts(weight)?, *k).map_err(core)?;
            Ok(Report {
                text: blocks(ts.iter().map(|t| (format!("spin = {}", t.spin), t.render()))),
                json: json!(ts
                    .iter()
                    .map(|t| json!({
                        "spin": t.spin,
                        "ribbons": t.ribbons.iter().map(|r| json!({
                            "label": r.label,
                            "cells": r.cells,
                        })).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>()),
            })
        }
        Command::Rc { lambda, mu } => {
            let rcs = rc_list(&part(lambda)?, &part(mu)?).map_err(core)?;
            Ok(Report {
                text: blocks(rcs.iter().map(|rc| (format!("cocharge = {}", rc.cocharge()), rc.render()))),
                json: json!(rcs
                    .iter()
                    .map(|rc| json!({
                        "cocharge": rc.cocharge(),
                        "nu": rc.nu.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                        "riggings": rc.riggings,
                    }))
                    .collect::<Vec<_>>()),
            })
        }
        Command::Kostka { lambda, mu } => {
            let k = kostka_poly(&part(lambda)?, &part(mu)?).map_err(core)?;
            Ok(Report {
                text: k.display_with(names).to_string(),
                json: json!({ "poly": k.to_string() }),
            })
        }
        Command::Genkostka { lambda, mu, k } => {
            let g = generalized_kostka(ring, &part(lambda)?, &part(mu)?, *k).map_err(core)?;
            Ok(Report {
                text: g.display_with(names).to_string(),
                json: json!({ "poly": g.to_string() }),
            })
        }
        Command::Llt { lambda, k, basis } => {
            let h = llt_h(&part(lambda)?, *k).map_err(core)?;
            let to = ring.basis(basis).map_err(core)?;
            let v = crate::eval::Value::Element(ring.convert(&h, &to).map_err(core)?);
            Ok(Report {
                text: render_text(&v, names),
                json: render_json(&v),
            })
        }
        Command::Bases => {
            let bases: Vec<_> = ring.bases().map(|b| (b.name.to_string(), b.display_name.clone())).collect();
            let ops: Vec<String> = ring.operators().map(|o| o.name.clone()).collect();
            let mut text: Vec<String> = bases.iter().map(|(n, d)| format!("{n}\t{d}")).collect();
            for o in &ops {
                text.push(format!("{o}\toperator"));
            }
            Ok(Report {
                text: text.join("\n"),
                json: json!({
                    "bases": bases.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect::<Vec<_>>(),
                    "operators": ops,
                }),
            })
        }
    }
}

impl Cli {
    /// Run against `ring` and render in the requested format.
    pub fn execute(&self, ring: &SymRing) -> Result<String, EvalError> {
        let names = self.var_names.clone().unwrap_or_default();
        let report = run(ring, &self.command, &names)?;
        Ok(match self.format {
            Format::Text => report.text,
            Format::Json => serde_json::to_string_pretty(&report.json).expect("plain data"),
        })
    }
}
