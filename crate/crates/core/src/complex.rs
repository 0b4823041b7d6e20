//! Abstract simplicial complexes: order complexes of finite posets, joins,
//! Euler characteristics and collapse certificates.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::poset::FinitePoset;

/// Default upper bound on the number of simplices a builder may produce.
pub const DEFAULT_SIMPLEX_CAP: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex would have {count} simplices, above the cap of {cap}")]
    SizeCapExceeded { count: u128, cap: u128 },
    #[error("vertex label `{0}` used twice")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// Sorted vertex indices.
pub type Simplex = Box<[u32]>;

/// A finite abstract simplicial complex. Vertices are indexed in label order
/// and `faces[d]` holds the `d`-simplices in lexicographic order, so derived
/// equality is equality of labelled complexes.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    faces: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// The closure of the given simplices. Every label is a vertex.
    pub fn from_simplices<S, I, V>(labels: impl IntoIterator<Item = S>, simplices: I) -> Result<Self, ComplexError>
    where
        S: Into<String>,
        I: IntoIterator<Item = V>,
        V: AsRef<[usize]>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut remap = vec![0u32; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertex(w[0].clone()));
        }
        let mut all: BTreeSet<Vec<u32>> = (0..sorted.len() as u32).map(|v| vec![v]).collect();
        for s in simplices {
            let mut verts: Vec<u32> = s.as_ref().iter().map(|&v| remap[v]).collect();
            verts.sort_unstable();
            verts.dedup();
            if all.contains(&verts) {
                continue;
            }
            for size in 1..=verts.len() {
                for sub in verts.iter().copied().combinations(size) {
                    all.insert(sub);
                }
            }
        }
        Ok(Self::from_closed_faces(sorted, all.into_iter().map(Vec::into_boxed_slice)))
    }

    /// Assembles from a face-closed family on already sorted labels.
    pub(crate) fn from_closed_faces(labels: Vec<String>, simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut faces: Vec<Vec<Simplex>> = Vec::new();
        for s in simplices {
            let d = s.len() - 1;
            if faces.len() <= d {
                faces.resize_with(d + 1, Vec::new);
            }
            faces[d].push(s);
        }
        for level in &mut faces {
            level.sort_unstable();
            level.dedup();
        }
        SimplicialComplex { labels, faces }
    }

    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), faces: Vec::new() }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, d: usize) -> &[Simplex] {
        self.faces.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn simplex_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Position of a sorted simplex within its dimension.
    pub fn face_index(&self, s: &[u32]) -> Option<usize> {
        self.faces.get(s.len().checked_sub(1)?)?.binary_search_by(|f| f.as_ref().cmp(s)).ok()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.face_index(s).is_some()
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().flatten()
    }

    /// Simplices not properly contained in another.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self.faces.iter().map(|l| vec![false; l.len()]).collect();
        for d in 1..self.faces.len() {
            for s in &self.faces[d] {
                for facet in facets(s) {
                    let i = self.face_index(&facet).expect("complex is closed");
                    covered[d - 1][i] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (d, level) in self.faces.iter().enumerate() {
            for (i, s) in level.iter().enumerate() {
                if !covered[d][i] {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn simplex_labels(&self, s: &[u32]) -> Vec<&str> {
        s.iter().map(|&v| self.labels[v as usize].as_str()).collect()
    }

    /// Renames vertices; the map must be injective.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<SimplicialComplex, ComplexError> {
        let labels: Vec<String> = self.labels.iter().map(|l| rename(l)).collect();
        let simplices: Vec<Vec<usize>> =
            self.maximal_simplices().iter().map(|s| s.iter().map(|&v| v as usize).collect()).collect();
        SimplicialComplex::from_simplices(labels, simplices)
    }

    /// The induced subcomplex on a vertex subset.
    pub fn full_subcomplex(&self, vertices: &[usize]) -> SimplicialComplex {
        let mut pos = vec![u32::MAX; self.labels.len()];
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i as u32;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let simplices = self
            .simplices()
            .filter(|s| s.iter().all(|&v| pos[v as usize] != u32::MAX))
            .map(|s| s.iter().map(|&v| pos[v as usize]).collect::<Simplex>())
            .collect::<Vec<_>>();
        Self::from_closed_faces(labels, simplices)
    }

    /// Parses one simplex per line, vertex labels separated by whitespace.
    /// Faces are added by closure; `#` starts a comment.
    pub fn parse(text: &str) -> Result<SimplicialComplex, ComplexError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut simplices = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut s = Vec::new();
            for tok in line.split_whitespace() {
                let next = labels.len();
                let i = *index.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    next
                });
                s.push(i);
            }
            simplices.push(s);
        }
        SimplicialComplex::from_simplices(labels, simplices)
    }
}

impl fmt::Display for SimplicialComplex {
    /// One simplex per line, labels in sorted order, lines in lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut all: Vec<&Simplex> = self.simplices().collect();
        all.sort();
        for s in all {
            writeln!(f, "{}", self.simplex_labels(s).join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels.len())
            .field("face_counts", &self.face_counts())
            .finish()
    }
}

/// The codimension-one faces of a simplex, in the order obtained by deleting
/// vertex 0, 1, ….
pub fn facets(s: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0..s.len()).filter(move |_| s.len() > 1).map(move |i| {
        let mut f = Vec::with_capacity(s.len() - 1);
        f.extend_from_slice(&s[..i]);
        f.extend_from_slice(&s[i + 1..]);
        f
    })
}

/// The order complex: vertices are the elements, simplices the non-empty chains.
pub fn order_complex(p: &FinitePoset, cap: u128) -> Result<SimplicialComplex, ComplexError> {
    let count = p.chain_count();
    if count > cap {
        return Err(ComplexError::SizeCapExceeded { count, cap });
    }
    let mut chains: Vec<Simplex> = Vec::with_capacity(count as usize);
    let mut stack: Vec<u32> = Vec::new();
    fn extend(p: &FinitePoset, stack: &mut Vec<u32>, out: &mut Vec<Simplex>) {
        let mut s = stack.clone();
        s.sort_unstable();
        out.push(s.into_boxed_slice());
        let top = *stack.last().unwrap() as usize;
        for &y in p.above(top) {
            stack.push(y);
            extend(p, stack, out);
            stack.pop();
        }
    }
    for x in 0..p.len() {
        stack.push(x as u32);
        extend(p, &mut stack, &mut chains);
        stack.pop();
    }
    Ok(SimplicialComplex::from_closed_faces(p.labels().to_vec(), chains))
}

/// The poset of non-empty simplices under inclusion. Labels join vertex
/// labels with `|`.
pub fn face_poset(c: &SimplicialComplex) -> FinitePoset {
    let all: Vec<&Simplex> = c.simplices().collect();
    let mut id: HashMap<&[u32], usize> = HashMap::with_capacity(all.len());
    for (i, s) in all.iter().enumerate() {
        id.insert(s, i);
    }
    let labels: Vec<String> = all.iter().map(|s| c.simplex_labels(s).join("|")).collect();
    let mut pairs = Vec::new();
    for (i, s) in all.iter().enumerate() {
        for size in 1..s.len() {
            for sub in s.iter().copied().combinations(size) {
                pairs.push((id[sub.as_slice()], i));
            }
        }
    }
    FinitePoset::from_closed_relation(labels, pairs).expect("face labels are distinct")
}

/// `sd(K)`, the order complex of the face poset.
pub fn barycentric_subdivision(c: &SimplicialComplex, cap: u128) -> Result<SimplicialComplex, ComplexError> {
    order_complex(&face_poset(c), cap)
}

/// The simplicial join `a ⁎ b`. Labels are prefixed with `0:` and `1:` when
/// the vertex sets overlap.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let overlap = {
        let la: BTreeSet<&String> = a.labels.iter().collect();
        b.labels.iter().any(|l| la.contains(l))
    };
    let (la, lb): (Vec<String>, Vec<String>) = if overlap {
        (a.labels.iter().map(|l| format!("0:{l}")).collect(), b.labels.iter().map(|l| format!("1:{l}")).collect())
    } else {
        (a.labels.clone(), b.labels.clone())
    };
    let mut labels: Vec<String> = la.iter().chain(&lb).cloned().collect();
    labels.sort();
    let pos = |l: &String| labels.binary_search(l).unwrap() as u32;
    let map_a: Vec<u32> = la.iter().map(pos).collect();
    let map_b: Vec<u32> = lb.iter().map(pos).collect();
    let sa: Vec<Vec<u32>> =
        std::iter::once(Vec::new()).chain(a.simplices().map(|s| s.iter().map(|&v| map_a[v as usize]).collect())).collect();
    let sb: Vec<Vec<u32>> =
        std::iter::once(Vec::new()).chain(b.simplices().map(|s| s.iter().map(|&v| map_b[v as usize]).collect())).collect();
    let mut out = Vec::with_capacity(sa.len() * sb.len());
    for x in &sa {
        for y in &sb {
            if x.is_empty() && y.is_empty() {
                continue;
            }
            let mut s: Vec<u32> = x.iter().chain(y).copied().collect();
            s.sort_unstable();
            out.push(s.into_boxed_slice());
        }
    }
    SimplicialComplex::from_closed_faces(labels, out)
}

/// Discrete complex on the given vertex labels (no edges).
pub fn discrete_complex<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> SimplicialComplex {
    SimplicialComplex::from_simplices(labels, Vec::<Vec<usize>>::new()).expect("labels must be distinct")
}

pub fn euler_characteristic(c: &SimplicialComplex) -> i64 {
    c.faces.iter().enumerate().map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
}

/// An elementary collapse: remove `face` together with its unique proper coface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    pub face: Simplex,
    pub coface: Simplex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CollapseCertificate {
    /// A sequence of elementary collapses leaving a single vertex.
    Collapsible { cone_apex: Option<u32>, steps: Vec<Collapse> },
    /// Greedy collapsing got stuck with this many simplices left. Not a proof
    /// of non-contractibility.
    Inconclusive { remaining: usize },
}

impl CollapseCertificate {
    pub fn is_collapsible(&self) -> bool {
        matches!(self, CollapseCertificate::Collapsible { .. })
    }
}

/// Vertices lying in every maximal simplex.
pub fn cone_apexes(c: &SimplicialComplex) -> Vec<u32> {
    let maximal = c.maximal_simplices();
    let Some(first) = maximal.first() else {
        return Vec::new();
    };
    first.iter().copied().filter(|v| maximal.iter().all(|m| m.binary_search(v).is_ok())).collect()
}

/// Collapses a cone onto its apex: every simplex missing the apex is a free
/// face of its join with the apex once all larger ones are gone.
pub fn cone_collapse(c: &SimplicialComplex, apex: u32) -> Vec<Collapse> {
    let mut steps = Vec::new();
    for level in c.faces.iter().rev() {
        for s in level {
            if s.binary_search(&apex).is_ok() {
                continue;
            }
            let mut coface = s.to_vec();
            coface.push(apex);
            coface.sort_unstable();
            steps.push(Collapse { face: s.clone(), coface: coface.into_boxed_slice() });
        }
    }
    steps
}

/// Tries to certify contractibility: cones first, then greedy free-face
/// collapsing down to a single vertex.
pub fn collapse_certify(c: &SimplicialComplex) -> CollapseCertificate {
    if let Some(&apex) = cone_apexes(c).first() {
        return CollapseCertificate::Collapsible { cone_apex: Some(apex), steps: cone_collapse(c, apex) };
    }
    greedy_collapse(c)
}

/// Greedy elementary collapses in a fixed deterministic order.
pub fn greedy_collapse(c: &SimplicialComplex) -> CollapseCertificate {
    let total = c.simplex_count();
    if total == 0 {
        return CollapseCertificate::Inconclusive { remaining: 0 };
    }
    let mut offset = vec![0usize; c.faces.len() + 1];
    for d in 0..c.faces.len() {
        offset[d + 1] = offset[d] + c.faces[d].len();
    }
    let simplex = |g: usize| -> &Simplex {
        let d = offset.partition_point(|&o| o <= g) - 1;
        &c.faces[d][g - offset[d]]
    };
    let gid = |s: &[u32]| offset[s.len() - 1] + c.face_index(s).expect("complex is closed");
    let mut cofaces: Vec<Vec<u32>> = vec![Vec::new(); total];
    for (faces, &base) in c.faces.iter().zip(&offset).skip(1) {
        for (i, s) in faces.iter().enumerate() {
            for f in facets(s) {
                cofaces[gid(&f)].push((base + i) as u32);
            }
        }
    }
    let mut count: Vec<usize> = cofaces.iter().map(Vec::len).collect();
    let mut alive = vec![true; total];
    let mut remaining = total;
    let mut queue: VecDeque<usize> = (0..total).filter(|&g| count[g] == 1).collect();
    let mut steps = Vec::new();
    while let Some(g) = queue.pop_front() {
        if !alive[g] || count[g] != 1 {
            continue;
        }
        let t = cofaces[g].iter().map(|&t| t as usize).find(|&t| alive[t]).expect("count tracks live cofaces");
        alive[g] = false;
        alive[t] = false;
        remaining -= 2;
        let (face, coface) = (simplex(g).clone(), simplex(t).clone());
        for f in facets(&coface) {
            let h = gid(&f);
            if h != g {
                count[h] -= 1;
                if count[h] == 1 {
                    queue.push_back(h);
                }
            }
        }
        for f in facets(&face) {
            let h = gid(&f);
            count[h] -= 1;
            if count[h] == 1 {
                queue.push_back(h);
            }
        }
        steps.push(Collapse { face, coface });
    }
    if remaining == 1 {
        CollapseCertificate::Collapsible { cone_apex: None, steps }
    } else {
        CollapseCertificate::Inconclusive { remaining }
    }
}

/// Replays a collapse sequence, checking each step is an elementary collapse
/// of the current complex. Returns the number of simplices left.
pub fn replay_collapses(c: &SimplicialComplex, steps: &[Collapse]) -> Result<usize, String> {
    let mut alive: BTreeSet<Vec<u32>> = c.simplices().map(|s| s.to_vec()).collect();
    for (i, step) in steps.iter().enumerate() {
        let face = step.face.to_vec();
        let coface = step.coface.to_vec();
        if !alive.contains(&face) || !alive.contains(&coface) {
            return Err(format!("step {i}: simplex already removed"));
        }
        let proper: Vec<&Vec<u32>> =
            alive.iter().filter(|s| s.len() > face.len() && face.iter().all(|v| s.binary_search(v).is_ok())).collect();
        if proper != [&coface] {
            return Err(format!("step {i}: {face:?} is not a free face of {coface:?}"));
        }
        alive.remove(&face);
        alive.remove(&coface);
    }
    Ok(alive.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;

    fn chain3() -> FinitePoset {
        build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn points(prefix: &str, k: usize) -> SimplicialComplex {
        discrete_complex((0..k).map(|i| format!("{prefix}{i}")))
    }

    fn cycle(n: usize) -> SimplicialComplex {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        SimplicialComplex::from_simplices((0..n).map(|i| format!("v{i:02}")), edges).unwrap()
    }

    #[test]
    fn order_complex_of_chain_is_simplex() {
        let c = order_complex(&chain3(), DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.simplex_count(), 7);
        assert_eq!(c.face_counts(), vec![3, 3, 1]);
        assert_eq!(c.to_string(), "a\na b\na b c\na c\nb\nb c\nc\n");
    }

    #[test]
    fn order_complex_of_antichain() {
        let p = build_poset(["x", "y", "z"], Vec::<(&str, &str)>::new()).unwrap();
        let c = order_complex(&p, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.face_counts(), vec![3]);
    }

    #[test]
    fn order_complex_cap() {
        assert_eq!(
            order_complex(&chain3(), 6),
            Err(ComplexError::SizeCapExceeded { count: 7, cap: 6 })
        );
    }

    #[test]
    fn join_examples() {
        let square = join(&points("a", 2), &points("b", 2));
        assert_eq!(square.face_counts(), vec![4, 4]);
        assert_eq!(euler_characteristic(&square), 0);
        let cone = join(&cycle(5), &points("apex", 1));
        assert_eq!(cone_apexes(&cone).len(), 1);
        let octa = join(&square, &points("c", 2));
        assert_eq!(octa.face_counts(), vec![6, 12, 8]);
        assert_eq!(euler_characteristic(&octa), 2);
        // overlapping labels get prefixed
        let j = join(&points("a", 1), &points("a", 1));
        assert_eq!(j.labels(), &["0:a0", "1:a0"]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&cycle(8)), 0);
        assert_eq!(euler_characteristic(&order_complex(&chain3(), 100).unwrap()), 1);
    }

    #[test]
    fn collapse_examples() {
        let simplex = order_complex(&chain3(), 100).unwrap();
        match collapse_certify(&simplex) {
            CollapseCertificate::Collapsible { steps, .. } => {
                assert_eq!(steps.len(), 3);
                assert_eq!(replay_collapses(&simplex, &steps), Ok(1));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(collapse_certify(&cycle(8)), CollapseCertificate::Inconclusive { remaining: 16 });
        let cone = join(&cycle(6), &points("z", 1));
        assert!(collapse_certify(&cone).is_collapsible());
    }

    #[test]
    fn greedy_collapse_of_a_tree() {
        let path =
            SimplicialComplex::from_simplices(["a", "b", "c", "d"], [vec![0, 1], vec![1, 2], vec![1, 3]]).unwrap();
        let CollapseCertificate::Collapsible { cone_apex: None, steps } = greedy_collapse(&path) else {
            panic!()
        };
        assert_eq!(replay_collapses(&path, &steps), Ok(1));
    }

    #[test]
    fn face_poset_and_subdivision() {
        let tri = cycle(3);
        let fp = face_poset(&tri);
        assert_eq!(fp.len(), 6);
        let sd = barycentric_subdivision(&tri, 100).unwrap();
        assert_eq!(sd.face_counts(), vec![6, 6]);
    }

    #[test]
    fn parse_and_print() {
        let c = SimplicialComplex::parse("b c\na b\n# comment\nd\n").unwrap();
        assert_eq!(c.to_string(), "a\na b\nb\nb c\nc\nd\n");
        assert_eq!(SimplicialComplex::parse(&c.to_string()).unwrap(), c);
        let sub = c.full_subcomplex(&[0, 1, 3]);
        assert_eq!(sub.to_string(), "a\na b\nb\nd\n");
    }
}
