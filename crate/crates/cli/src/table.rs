use adrg::classify::{Check, Level, PunctualProfile, Witness};

/// Integers print without a fractional part, other values with up to six
/// decimals.
pub fn real(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        let r = x.round();
        return format!("{}", if r == 0.0 { 0.0 } else { r });
    }
    let s = format!("{x:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn witness(w: &Witness) -> String {
    match w {
        Witness::Walks {
            ell,
            first,
            second,
            counts,
        } => format!(
            "walks of length {ell}: {:?} has {} but {:?} has {}",
            first, counts[0], second, counts[1]
        ),
        Witness::Multiplicity {
            eigenvalue,
            first,
            second,
            values,
            ..
        } => format!(
            "crossed multiplicity at {}: {:?} has {} but {:?} has {}",
            real(*eigenvalue),
            first,
            real(values[0]),
            second,
            real(values[1])
        ),
        Witness::Polynomials { first, second, polys } => format!(
            "{:?} gives {} but {:?} gives {}",
            first, polys[0], second, polys[1]
        ),
    }
}

pub fn first_witness<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Option<String> {
    checks
        .into_iter()
        .find_map(|c| c.witness.as_ref())
        .map(witness)
}

fn row(level: &Level) -> String {
    let [a, b, c, d] = level.statuses().map(|s| s.symbol());
    format!(
        "{:>3}  {:>6}  {:<8}  {:<8}  {:<10}  {:<11}",
        level.h, level.tuples, a, b, c, d
    )
}

pub fn profile(p: &PunctualProfile) -> String {
    let mut out = String::new();
    out.push_str("  h  tuples  walk      spectrum  cospectral  isospectral\n");
    for level in &p.levels {
        out.push_str(row(level).trim_end());
        out.push('\n');
        let checks = [
            &level.walk_regular,
            &level.spectrum_regular,
            &level.cospectral,
        ];
        if let Some(w) = first_witness(checks) {
            out.push_str(&format!("     witness: {w}\n"));
        }
        for note in &level.notes {
            out.push_str(&format!("     note: {note}\n"));
        }
    }
    for note in &p.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}
