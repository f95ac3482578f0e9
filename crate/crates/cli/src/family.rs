//! Graph expressions.
//!
//! A graph argument is either a path to a graph file or a family
//! expression. Expressions are token lists, written space-separated on the
//! `gen` command line or `:`-separated elsewhere:
//!
//! ```text
//! pc D | hypercube D | cycle N | path N | complete N | kneser N K
//! mycielski K EXPR | power EXPR | evenpower EXPR | walkpower L EXPR
//! cayley SPECFILE | file PATH
//! ```
//!
//! Short aliases: `pcN`, `qN`, `cN`, `kN`, `pN`, `petersen`, `grotzsch`.

use std::path::Path;

use cayhom_core::families::{self, DEFAULT_DIM_CAP};
use cayhom_core::power::power_graph_with_cap;
use cayhom_core::walk::walk_power;
use cayhom_core::Graph;

use crate::formats::{parse_graph, parse_spec};
use crate::CliError;

pub const CAP_VAR: &str = "CAYHOM_CAP";

/// Dimension cap from `CAYHOM_CAP`, or the library default.
pub fn dim_cap() -> Result<u32, CliError> {
    match std::env::var(CAP_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_VAR}={s:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_DIM_CAP),
    }
}

/// A graph together with the name it was built from.
pub struct Named {
    pub name: String,
    pub graph: Graph,
}

/// Resolves a command-line graph argument.
pub fn resolve(arg: &str) -> Result<Named, CliError> {
    if Path::new(arg).is_file() {
        return Ok(Named {
            name: format!("file:{arg}"),
            graph: load_graph_file(arg)?,
        });
    }
    let tokens: Vec<String> = arg.split(':').map(str::to_string).collect();
    build(&tokens)
}

/// Builds a graph from an already-split expression.
pub fn build(tokens: &[String]) -> Result<Named, CliError> {
    let cap = dim_cap()?;
    let mut pos = 0;
    let graph = parse(tokens, &mut pos, cap)?;
    if pos != tokens.len() {
        return Err(CliError::Usage(format!(
            "unexpected trailing tokens: {}",
            tokens[pos..].join(" ")
        )));
    }
    Ok(Named {
        name: tokens.join(":"),
        graph,
    })
}

pub fn load_graph_file(path: &str) -> Result<Graph, CliError> {
    let text = read(path)?;
    parse_graph(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

pub fn load_spec_file(path: &str) -> Result<families::CayleySpec, CliError> {
    let text = read(path)?;
    parse_spec(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

fn next<'a>(tokens: &'a [String], pos: &mut usize, what: &str) -> Result<&'a str, CliError> {
    let t = tokens
        .get(*pos)
        .ok_or_else(|| CliError::Usage(format!("expected {what}")))?;
    *pos += 1;
    Ok(t)
}

fn int<T: std::str::FromStr>(tokens: &[String], pos: &mut usize, what: &str) -> Result<T, CliError> {
    let t = next(tokens, pos, what)?;
    t.parse().map_err(|_| CliError::Usage(format!("{what} must be a non-negative integer, got {t:?}")))
}

/// Splits `pc6` into `("pc", 6)` style aliases.
fn alias(tok: &str) -> Option<Vec<String>> {
    match tok {
        "petersen" => return Some(vec!["kneser".into(), "5".into(), "2".into()]),
        "grotzsch" => return Some(vec!["mycielski".into(), "1".into(), "cycle".into(), "5".into()]),
        _ => {}
    }
    let split = tok.find(|c: char| c.is_ascii_digit())?;
    let (head, num) = tok.split_at(split);
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let family = match head {
        "pc" => "pc",
        "q" => "hypercube",
        "c" => "cycle",
        "k" => "complete",
        "p" => "path",
        _ => return None,
    };
    Some(vec![family.into(), num.into()])
}

fn parse(tokens: &[String], pos: &mut usize, cap: u32) -> Result<Graph, CliError> {
    let head = next(tokens, pos, "a graph family")?;
    if let Some(expanded) = alias(head) {
        let mut p = 0;
        return parse(&expanded, &mut p, cap);
    }
    let g = match head {
        "pc" => families::projective_cube_with_cap(int(tokens, pos, "dimension")?, cap)?,
        "hypercube" => families::hypercube_with_cap(int(tokens, pos, "dimension")?, cap)?,
        "cycle" => families::cycle(int(tokens, pos, "cycle length")?)?,
        "path" => families::path(int(tokens, pos, "path length")?)?,
        "complete" => families::complete(int(tokens, pos, "vertex count")?)?,
        "kneser" => {
            let n = int(tokens, pos, "kneser n")?;
            families::kneser(n, int(tokens, pos, "kneser k")?)?
        }
        "mycielski" => {
            let k: usize = int(tokens, pos, "mycielski depth")?;
            families::mycielski_level(&parse(tokens, pos, cap)?, k)
        }
        "power" => power_graph_with_cap(&parse(tokens, pos, cap)?, cap)?.graph,
        "evenpower" => power_graph_with_cap(&parse(tokens, pos, cap)?, cap)?.even_graph(),
        "walkpower" => {
            let l: usize = int(tokens, pos, "walk length")?;
            walk_power(&parse(tokens, pos, cap)?, l)?.graph
        }
        "cayley" => families::cayley_with_cap(&load_spec_file(next(tokens, pos, "spec file")?)?, cap)?,
        "file" => load_graph_file(next(tokens, pos, "graph file")?)?,
        other => return Err(CliError::Usage(format!("unknown graph family {other:?}"))),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split(' ').map(str::to_string).collect()
    }

    #[test]
    fn aliases_expand() {
        assert_eq!(alias("pc6"), Some(toks("pc 6")));
        assert_eq!(alias("q3"), Some(toks("hypercube 3")));
        assert_eq!(alias("k3"), Some(toks("complete 3")));
        assert_eq!(alias("kneser"), None);
        assert_eq!(alias("x3"), None);
        assert_eq!(alias("pc6x"), None);
    }

    #[test]
    fn nested_expressions() {
        assert_eq!(build(&toks("mycielski 1 cycle 5")).unwrap().graph.n(), 11);
        assert_eq!(build(&toks("power c5")).unwrap().graph.n(), 32);
        assert_eq!(build(&toks("evenpower c5")).unwrap().graph.n(), 16);
        assert_eq!(build(&toks("walkpower 3 cycle 7")).unwrap().graph.edge_count(), 14);
        assert_eq!(resolve("grotzsch").unwrap().graph.edge_count(), 20);
        assert!(build(&toks("pc 4 4")).is_err());
        assert!(build(&toks("mycielski 1")).is_err());
        assert!(build(&toks("wheel 5")).is_err());
    }
}
