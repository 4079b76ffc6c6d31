use super::Complex;

/// A face-closed subset of a parent complex, stored as simplex indices per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    cells: Vec<Vec<usize>>,
    member: Vec<Vec<bool>>,
}

impl Subcomplex {
    /// All simplices whose every vertex satisfies `keep`.
    pub fn full(parent: &Complex, keep: impl Fn(usize) -> bool) -> Subcomplex {
        let mask: Vec<bool> = (0..parent.vertex_count()).map(keep).collect();
        let mut cells = Vec::new();
        let mut member = Vec::new();
        for q in 0..=parent.dim() {
            let flags: Vec<bool> = parent.simplices(q).iter().map(|s| s.iter().all(|&v| mask[v])).collect();
            cells.push(flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect());
            member.push(flags);
        }
        Subcomplex { cells, member }
    }

    /// All simplices of dimension at most `max_dim`.
    pub fn skeleton(parent: &Complex, max_dim: usize) -> Subcomplex {
        let mut cells = Vec::new();
        let mut member = Vec::new();
        for q in 0..=parent.dim() {
            let count = parent.simplices(q).len();
            let inside = q <= max_dim;
            cells.push(if inside { (0..count).collect() } else { Vec::new() });
            member.push(vec![inside; count]);
        }
        Subcomplex { cells, member }
    }

    pub fn whole(parent: &Complex) -> Subcomplex {
        Subcomplex::full(parent, |_| true)
    }

    pub fn empty(parent: &Complex) -> Subcomplex {
        Subcomplex::full(parent, |_| false)
    }

    /// Indices (into `parent.simplices(q)`) of the q-simplices in this subcomplex.
    pub fn cells(&self, q: usize) -> &[usize] {
        self.cells.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, q: usize, index: usize) -> bool {
        self.member.get(q).is_some_and(|m| m[index])
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.contains(0, v)
    }

    pub fn len(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells(0).is_empty()
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> bool {
        self.cells.iter().enumerate().all(|(q, cells)| cells.iter().all(|&i| other.contains(q, i)))
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Connected components of a subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component of each parent vertex, `None` outside the subcomplex.
    pub label: Vec<Option<usize>>,
    /// Vertices of each component, ordered by their minimal vertex.
    pub members: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

pub fn connected_components(parent: &Complex, sub: &Subcomplex) -> Components {
    let n = parent.vertex_count();
    let mut uf = UnionFind::new(n);
    for &e in sub.cells(1) {
        let edge = &parent.simplices(1)[e];
        uf.union(edge[0], edge[1]);
    }
    let mut label = vec![None; n];
    let mut root_label = vec![None; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    // Vertices are visited in increasing order, so component ids follow minimal vertices.
    for &v in sub.cells(0) {
        let r = uf.find(v);
        let id = *root_label[r].get_or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        label[v] = Some(id);
        members[id].push(v);
    }
    Components { label, members }
}
