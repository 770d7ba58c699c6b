//! Rendering for the `trace` subcommand: one row per prefix of the input,
//! showing the prefix, its forest parse in abbreviated constructor notation
//! (`J` for a successful parse, `B`/`N` for `Bin`/`Nul`, `Nothing` for
//! failure), and the kept forest.
//!
//! ```text
//! ""        J [N]              [N]
//! "("       Nothing
//! "()"      J [B N N]          [B N N]
//! ```

use lbs_core::{Forest, Tree};

/// Abbreviates constructor notation: `Bin (Bin Nul Nul) Nul` -> `B (B N N) N`.
fn abbrev_tree(tree: &Tree) -> String {
    tree.constructor_notation().replace("Bin", "B").replace("Nul", "N")
}

fn abbrev_forest(forest: &Forest) -> String {
    let trees: Vec<String> = forest.trees().map(abbrev_tree).collect();
    format!("[{}]", trees.join(","))
}

/// The middle column: `J [...]` or `Nothing`.
pub fn parse_cell(row: &Option<Forest>) -> String {
    match row {
        Some(forest) => format!("J {}", abbrev_forest(forest)),
        None => "Nothing".to_string(),
    }
}

/// The right column: the forest kept by a successful parse, blank otherwise.
fn kept_cell(row: &Option<Forest>) -> String {
    match row {
        Some(forest) => abbrev_forest(forest),
        None => String::new(),
    }
}

/// Lays out the three columns, two spaces minimum between them.
pub fn render(input: &str, rows: &[Option<Forest>]) -> String {
    let prefixes: Vec<String> = (0..rows.len()).map(|i| format!("{:?}", &input[..i])).collect();
    let parses: Vec<String> = rows.iter().map(parse_cell).collect();
    let prefix_width = prefixes.iter().map(String::len).max().unwrap_or(0);
    let parse_width = parses.iter().map(String::len).max().unwrap_or(0);

    let mut out = String::new();
    for ((prefix, parse), row) in prefixes.iter().zip(&parses).zip(rows) {
        let kept = kept_cell(row);
        let line = format!("{prefix:<prefix_width$}  {parse:<parse_width$}  {kept}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
