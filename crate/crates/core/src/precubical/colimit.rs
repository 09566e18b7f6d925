//! Finite colimits, computed cellwise as a quotient of the disjoint union.

use super::{Cell, PrecubicalError, PrecubicalMap, PrecubicalSet};

/// A map between two objects of a [`Diagram`], by object index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub map: PrecubicalMap,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    pub objects: Vec<PrecubicalSet>,
    pub arrows: Vec<Arrow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colimit {
    pub set: PrecubicalSet,
    /// One map per diagram object.
    pub cocone: Vec<PrecubicalMap>,
}

/// Cells of all objects, tagged `k:id` for object `k`, modulo the
/// equivalence generated by `x ~ f(x)` for every arrow `f`. Each class is
/// named after its least tagged id.
pub fn finite_colimit(diagram: &Diagram) -> Result<Colimit, PrecubicalError> {
    let objects = &diagram.objects;
    for (n, a) in diagram.arrows.iter().enumerate() {
        let (Some(x), Some(y)) = (objects.get(a.from), objects.get(a.to)) else {
            return Err(PrecubicalError::IllFormedDiagram(format!(
                "arrow {n} refers to a missing object"
            )));
        };
        if let Some(v) = a.map.violations(x, y).first() {
            return Err(PrecubicalError::IllFormedDiagram(format!("arrow {n}: {v}")));
        }
    }

    let mut offsets = Vec::with_capacity(objects.len());
    let mut total = 0;
    for x in objects {
        offsets.push(total);
        total += x.len();
    }
    let mut classes = UnionFind::new(total);
    for a in &diagram.arrows {
        for (c, &image) in a.map.images().iter().enumerate() {
            classes.union(offsets[a.from] + c, offsets[a.to] + image);
        }
    }

    let tagged = |k: usize, c: usize| format!("{k}:{}", objects[k].cell(c).id());
    let mut name: Vec<Option<String>> = vec![None; total];
    for (k, x) in objects.iter().enumerate() {
        for c in 0..x.len() {
            let root = classes.find(offsets[k] + c);
            let id = tagged(k, c);
            if name[root].as_ref().is_none_or(|n| id < *n) {
                name[root] = Some(id);
            }
        }
    }
    let mut slot = vec![usize::MAX; total];
    let mut cells: Vec<Cell> = Vec::new();
    for (k, x) in objects.iter().enumerate() {
        for c in 0..x.len() {
            let root = classes.find(offsets[k] + c);
            if slot[root] == usize::MAX {
                slot[root] = cells.len();
                cells.push(Cell {
                    id: name[root].clone().expect("every class is named"),
                    word: x.cell(c).word.clone(),
                    faces: Vec::new(),
                });
            }
        }
    }
    let mut filled = vec![false; cells.len()];
    for (k, x) in objects.iter().enumerate() {
        for c in 0..x.len() {
            let target = slot[classes.find(offsets[k] + c)];
            let faces: Vec<[usize; 2]> = x
                .cell(c)
                .faces()
                .iter()
                .map(|pair| pair.map(|f| slot[classes.find(offsets[k] + f)]))
                .collect();
            if filled[target] {
                if cells[target].faces != faces {
                    return Err(PrecubicalError::IllFormedDiagram(format!(
                        "faces of class {} are not well defined",
                        cells[target].id
                    )));
                }
            } else {
                cells[target].faces = faces;
                filled[target] = true;
            }
        }
    }

    let (set, renumber) = PrecubicalSet::from_cells_indexed(cells);
    let cocone = objects
        .iter()
        .enumerate()
        .map(|(k, x)| {
            PrecubicalMap::new(
                (0..x.len())
                    .map(|c| renumber[slot[classes.find(offsets[k] + c)]])
                    .collect(),
            )
        })
        .collect();
    Ok(Colimit { set, cocone })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
