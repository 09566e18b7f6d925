//! Small helpers for `u64` bitsets indexed by event or position.

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn has(set: u64, i: usize) -> bool {
    set & bit(i) != 0
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Iterates the set bits in ascending order.
pub(crate) fn ones(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

pub(crate) fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |acc, i| acc | bit(i))
}

/// Transposes an adjacency matrix given as rows of bits.
pub(crate) fn transpose(rows: &[u64]) -> Vec<u64> {
    let mut cols = vec![0u64; rows.len()];
    for (i, &row) in rows.iter().enumerate() {
        for j in ones(row) {
            cols[j] |= bit(i);
        }
    }
    cols
}

/// In-place transitive closure (Warshall).
pub(crate) fn close(rows: &mut [u64]) {
    for k in 0..rows.len() {
        let row_k = rows[k];
        for row in rows.iter_mut() {
            if has(*row, k) {
                *row |= row_k;
            }
        }
    }
}

/// Renumbers a relation: `order[p]` is the old index placed at new position `p`.
pub(crate) fn permute_rows(rows: &[u64], order: &[usize], inverse: &[usize]) -> Vec<u64> {
    order.iter().map(|&old| permute_set(rows[old], inverse)).collect()
}

pub(crate) fn permute_set(set: u64, inverse: &[usize]) -> u64 {
    ones(set).fold(0, |acc, j| acc | bit(inverse[j]))
}

pub(crate) fn invert(order: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; order.len()];
    for (p, &old) in order.iter().enumerate() {
        inv[old] = p;
    }
    inv
}
