use crate::ambient::{Config, TwoCell};

/// A copy of a 2-cell with one entry changed.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub from: Config,
    pub to: Config,
    pub cell: TwoCell,
}

/// Every single-entry mutation `v ↦ v + 1` of the nonzero entries of `cell`.
pub fn mutations(cell: &TwoCell) -> Vec<Mutation> {
    let one = cell.field().one();
    let entries: Vec<(Config, Config, _)> = cell.entries().map(|(s, t, v)| (s.clone(), t.clone(), v.clone())).collect();
    let mut out = Vec::new();
    for k in 0..entries.len() {
        let changed: Vec<_> = entries
            .iter()
            .enumerate()
            .map(|(j, (s, t, v))| (s.clone(), t.clone(), if j == k { v + &one } else { v.clone() }))
            .collect();
        let mutated = TwoCell::from_entries(cell.field(), cell.source(), cell.target(), changed)
            .expect("same support as a valid cell");
        out.push(Mutation { from: entries[k].0.clone(), to: entries[k].1.clone(), cell: mutated });
    }
    out
}
