//! Tensor products and coproducts.

use super::{escape, Cell, PrecubicalMap, PrecubicalSet};

impl PrecubicalSet {
    /// The one-vertex set, unit of the tensor product.
    pub fn unit() -> Self {
        PrecubicalSet::from_cells(vec![Cell {
            id: "()".into(),
            word: Vec::new(),
            faces: Vec::new(),
        }])
    }

    /// `X ⊗ Y`: cells are pairs `(x, y)` of shape `word(x)·word(y)`; faces
    /// below `dim x` act on `x`, the others on `y`.
    pub fn tensor(&self, other: &PrecubicalSet) -> PrecubicalSet {
        self.tensor_indexed(other).0
    }

    /// The tensor product and the index of each pair: `(x, y)` sits at
    /// `table[x * other.len() + y]`.
    pub fn tensor_indexed(&self, other: &PrecubicalSet) -> (PrecubicalSet, Vec<usize>) {
        let m = other.len();
        let pair = |x: usize, y: usize| x * m + y;
        let mut cells = Vec::with_capacity(self.len() * m);
        for (xi, x) in self.cells().iter().enumerate() {
            for (yi, y) in other.cells().iter().enumerate() {
                let left = x.faces().iter().map(|[lo, hi]| [pair(*lo, yi), pair(*hi, yi)]);
                let right = y.faces().iter().map(|[lo, hi]| [pair(xi, *lo), pair(xi, *hi)]);
                cells.push(Cell {
                    id: format!("({},{})", escape(&x.id), escape(&y.id)),
                    word: x.word.iter().chain(&y.word).cloned().collect(),
                    faces: left.chain(right).collect(),
                });
            }
        }
        PrecubicalSet::from_cells_indexed(cells)
    }

    /// Disjoint union with cells renamed `k:id`, and the injections.
    pub fn coproduct(parts: &[&PrecubicalSet]) -> (PrecubicalSet, Vec<PrecubicalMap>) {
        let mut cells = Vec::new();
        let mut offsets = Vec::with_capacity(parts.len());
        for (k, x) in parts.iter().enumerate() {
            let offset = cells.len();
            offsets.push(offset);
            cells.extend(x.cells().iter().map(|c| Cell {
                id: format!("{k}:{}", c.id),
                word: c.word.clone(),
                faces: c
                    .faces
                    .iter()
                    .map(|[lo, hi]| [lo + offset, hi + offset])
                    .collect(),
            }));
        }
        let (sum, renumber) = PrecubicalSet::from_cells_indexed(cells);
        let injections = parts
            .iter()
            .zip(&offsets)
            .map(|(x, &offset)| PrecubicalMap::new(renumber[offset..offset + x.len()].to_vec()))
            .collect();
        (sum, injections)
    }
}
