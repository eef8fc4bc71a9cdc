use alloc::string::String;
use alloc::vec::Vec;

use super::pattern::Pattern;
use crate::scalars::IndexSet;

/// Legend symbol of one entry: `∘ = ι₁`, `• = ι₂`, `× = ι₁ι₂`,
/// `⊗ = ι₁ι₂ι₃`, `⋄ = ι₂ι₃`, `★ = ι₁ι₃`, `△ = ι₃`, `·` for no nilpotent
/// factor. Anything else is spelled out, e.g. `ι14`.
pub fn symbol(s: IndexSet) -> String {
    let idx: Vec<usize> = s.iter().collect();
    let sym = match idx.as_slice() {
        [] => "·",
        [1] => "∘",
        [2] => "•",
        [1, 2] => "×",
        [1, 2, 3] => "⊗",
        [2, 3] => "⋄",
        [1, 3] => "★",
        [3] => "△",
        _ => {
            let mut out = String::from("ι");
            for k in idx {
                out.push(char::from_digit(k as u32, 10).unwrap_or('?'));
            }
            return out;
        }
    };
    sym.into()
}

/// A parameter monomial written with `ι`, `1` when empty.
pub fn iota(s: IndexSet) -> String {
    if s.is_empty() {
        return "1".into();
    }
    s.iter().map(|k| alloc::format!("ι{k}")).collect()
}

/// Upper triangle of a pattern, one string per row, lower entries blank and
/// the diagonal `·`. Columns are padded to the widest symbol.
pub fn pattern_rows(p: &Pattern) -> Vec<String> {
    let n = p.n();
    let width = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .map(|(a, b)| symbol(p.get(a, b)).chars().count())
        .max()
        .unwrap_or(1);
    (1..=n)
        .map(|a| {
            let cells: Vec<String> = (1..=n)
                .map(|b| {
                    let s = match b.cmp(&a) {
                        core::cmp::Ordering::Less => String::new(),
                        core::cmp::Ordering::Equal => "·".into(),
                        core::cmp::Ordering::Greater => symbol(p.get(a, b)),
                    };
                    let pad = width - s.chars().count();
                    let mut cell = String::from(" ").repeat(pad);
                    cell.push_str(&s);
                    cell
                })
                .collect();
            cells.join(" ").trim_end().into()
        })
        .collect()
}
