//! Truncated process replication.

use super::{Hda, HdaError, Span};
use crate::precubical::PrecubicalMap;

/// `∐_{n ≤ max_power} X^{⊗n}` with `X^{⊗0} = I`.
pub fn replicate(x: &Hda, max_power: usize) -> Hda {
    let mut powers = vec![Hda::unit()];
    for k in 1..=max_power {
        let next = powers[k - 1].tensor(x);
        powers.push(next);
    }
    Hda::coproduct(&powers.iter().collect::<Vec<_>>()).0
}

/// A finite prefix `A_1 → A_2 → … → A_N` of the replication chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub stages: Vec<Hda>,
    /// `maps[k]` goes from `stages[k]` to `stages[k + 1]`.
    pub maps: Vec<PrecubicalMap>,
}

/// Builds `A_1 = A` and `A_{n+1}` as the pushout of
/// `A_n ← A^{⊗n,ε} → A^{⊗n} ⊗ A`, the right leg being `c ↦ (c, base)`.
///
/// Start cells are dropped while building; afterwards every stage gets the
/// image of `(base, …, base)` as its only start cell.
pub fn replication_chain_prefix(a: &Hda, base: usize, n: usize) -> Result<Chain, HdaError> {
    if n == 0 {
        return Err(HdaError::Unsupported("the chain starts at A_1".into()));
    }
    if base >= a.carrier().len() || a.carrier().cell(base).dimension() != 0 {
        return Err(HdaError::Unsupported("the base cell must be a vertex".into()));
    }
    let factor = a.with_markings(Vec::new(), a.accept().to_vec())?;
    let m = factor.carrier().len();

    let mut power = factor.clone();
    let mut power_origin = base;
    let mut stage = factor.clone();
    let mut into_stage = PrecubicalMap::identity(factor.carrier());
    let mut stages = Vec::with_capacity(n);
    let mut origins = Vec::with_capacity(n);
    let mut maps = Vec::with_capacity(n - 1);
    stages.push(stage.clone());
    origins.push(base);

    for _ in 1..n {
        let next_power = power.tensor(&factor);
        let (_, table) = power.carrier().tensor_indexed(factor.carrier());
        let along_base = PrecubicalMap::new((0..power.carrier().len()).map(|c| table[c * m + base]).collect());
        let span = Span {
            apex: power.unmarked(),
            left: stage,
            right: next_power.clone(),
            left_map: into_stage,
            right_map: along_base,
        };
        let (glued, cocone) = Hda::pushout(&span)?;
        let next_origin = table[power_origin * m + base];
        origins.push(cocone[2].apply(next_origin));
        maps.push(cocone[1].clone());
        into_stage = cocone[2].clone();
        stage = glued;
        stages.push(stage.clone());
        power = next_power;
        power_origin = next_origin;
    }

    let stages = stages
        .into_iter()
        .zip(origins)
        .map(|(s, o)| s.with_markings(vec![o], s.accept().to_vec()))
        .collect::<Result<_, _>>()?;
    Ok(Chain { stages, maps })
}
