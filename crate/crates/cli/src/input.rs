use std::path::Path;

use adrg::{catalog, parse_graph6, Graph};

use crate::failure::Failure;

/// A graph read from a `.g6` or `.json` file, or looked up in the catalog.
pub struct Input {
    pub graph: Graph,
    /// Catalog name, if the graph came from the catalog.
    pub name: Option<String>,
    pub source: String,
}

pub fn load(spec: &str) -> Result<Input, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {spec}: {e}")))?;
        let graph = if is_json(path, &text) {
            Graph::from_json(&text)?
        } else {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Failure::parse(format!("{spec} is empty")))?;
            parse_graph6(line)?
        };
        return Ok(Input {
            graph,
            name: None,
            source: spec.to_string(),
        });
    }
    let graph = catalog(spec)?;
    Ok(Input {
        graph,
        name: Some(spec.trim().to_ascii_lowercase()),
        source: spec.to_string(),
    })
}

fn is_json(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => true,
        Some(ext) if ext.eq_ignore_ascii_case("g6") => false,
        _ => text.trim_start().starts_with('{'),
    }
}

/// Comma-separated vertex list such as `0,4,7`.
pub fn vertex_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::parse(format!("bad vertex '{t}' in '{text}'")))
        })
        .collect()
}

/// graph6 when the graph is simple, the JSON pseudograph document otherwise.
pub fn encode(g: &Graph) -> (String, &'static str) {
    match adrg::emit_graph6(g) {
        Ok(s) => (format!("{s}\n"), "g6"),
        Err(_) => (format!("{}\n", g.to_json()), "json"),
    }
}
