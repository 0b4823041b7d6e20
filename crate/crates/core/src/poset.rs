//! Finite posets and mirrored posets.
//!
//! Elements carry string labels and are indexed in label order, so every
//! listing produced here is sorted by label. The stored relation is the
//! strict order, transitively closed.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("order relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` declared twice")]
    DuplicateElement(String),
    #[error("mirror assigns {got} elements, poset has {expected}")]
    MirrorLength { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    above: Vec<Vec<u32>>,
    below: Vec<Vec<u32>>,
}

/// Sorts labels and returns them with the old-index → new-index map.
fn sort_labels(labels: Vec<String>) -> Result<(Vec<String>, Vec<usize>), PosetError> {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
    let mut remap = vec![0; labels.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(PosetError::DuplicateElement(w[0].clone()));
    }
    Ok((sorted, remap))
}

impl FinitePoset {
    /// Builds a poset from declared elements and strict relations `a < b`,
    /// taking the transitive closure.
    pub fn build<S, P>(elements: impl IntoIterator<Item = S>, strict_pairs: impl IntoIterator<Item = (P, P)>) -> Result<Self, PosetError>
    where
        S: Into<String>,
        P: AsRef<str>,
    {
        let labels: Vec<String> = elements.into_iter().map(Into::into).collect();
        let (labels, _) = sort_labels(labels)?;
        let index: HashMap<String, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut edges = Vec::new();
        for (a, b) in strict_pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| PosetError::UnknownElement(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| PosetError::UnknownElement(b.to_string()))?;
            edges.push((ia, ib));
        }
        Self::close(labels, index, edges)
    }

    /// Builds a poset from an already transitive strict relation given on
    /// arbitrary-order labels.
    pub(crate) fn from_closed_relation(labels: Vec<String>, pairs: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let (labels, remap) = sort_labels(labels)?;
        let index: HashMap<String, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let n = labels.len();
        let mut above = vec![Vec::new(); n];
        let mut below = vec![Vec::new(); n];
        for (a, b) in pairs {
            let (a, b) = (remap[a], remap[b]);
            if a == b {
                return Err(PosetError::CycleDetected(labels[a].clone()));
            }
            above[a].push(b as u32);
            below[b].push(a as u32);
        }
        for list in above.iter_mut().chain(below.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let p = FinitePoset { labels, index, above, below };
        debug_assert!(p.is_transitive());
        Ok(p)
    }

    fn close(labels: Vec<String>, index: HashMap<String, usize>, edges: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in &edges {
            if a == b {
                return Err(PosetError::CycleDetected(labels[a].clone()));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm; leftovers lie on a cycle
        let mut topo = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).rev().collect();
        while let Some(x) = stack.pop() {
            topo.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(PosetError::CycleDetected(labels[stuck].clone()));
        }
        let words = n.div_ceil(64);
        let mut reach: Vec<Vec<u64>> = vec![Vec::new(); n];
        for &x in topo.iter().rev() {
            let mut bits = vec![0u64; words];
            for &y in &succ[x] {
                bits[y / 64] |= 1 << (y % 64);
                for (w, r) in bits.iter_mut().zip(&reach[y]) {
                    *w |= r;
                }
            }
            reach[x] = bits;
        }
        let mut above = vec![Vec::new(); n];
        let mut below = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if reach[x][y / 64] >> (y % 64) & 1 == 1 {
                    above[x].push(y as u32);
                    below[y].push(x as u32);
                }
            }
        }
        Ok(FinitePoset { labels, index, above, below })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.index.get(label).copied().ok_or_else(|| PosetError::UnknownElement(label.to_string()))
    }

    /// Strict order `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].binary_search(&(y as u32)).is_ok()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.lt(y, x)
    }

    /// Elements strictly above `x`, ascending by index.
    pub fn above(&self, x: usize) -> &[u32] {
        &self.above[x]
    }

    /// Elements strictly below `x`, ascending by index.
    pub fn below(&self, x: usize) -> &[u32] {
        &self.below[x]
    }

    pub fn relation_size(&self) -> usize {
        self.above.iter().map(Vec::len).sum()
    }

    /// All strict pairs `(x, y)` with `x < y`.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.above.iter().enumerate().flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y as usize)))
    }

    /// Pairs `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .filter(|&(x, y)| !self.above[x].iter().any(|&z| self.lt(z as usize, y)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.above[x].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.below[x].is_empty()).collect()
    }

    /// `↑A`: every element `≥` some element of `A`, sorted.
    pub fn upset(&self, set: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.len()];
        for &a in set {
            mark[a] = true;
            for &y in &self.above[a] {
                mark[y as usize] = true;
            }
        }
        (0..self.len()).filter(|&i| mark[i]).collect()
    }

    /// `↓A`, the dual of [`FinitePoset::upset`].
    pub fn downset(&self, set: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.len()];
        for &a in set {
            mark[a] = true;
            for &y in &self.below[a] {
                mark[y as usize] = true;
            }
        }
        (0..self.len()).filter(|&i| mark[i]).collect()
    }

    pub fn upset_labels<S: AsRef<str>>(&self, set: &[S]) -> Result<Vec<String>, PosetError> {
        let idx = set.iter().map(|s| self.index_of(s.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ok(self.upset(&idx).into_iter().map(|i| self.labels[i].clone()).collect())
    }

    /// The same elements with the order reversed.
    pub fn opposite(&self) -> FinitePoset {
        FinitePoset {
            labels: self.labels.clone(),
            index: self.index.clone(),
            above: self.below.clone(),
            below: self.above.clone(),
        }
    }

    /// The induced subposet on `subset` (labels are kept).
    pub fn induced(&self, subset: &[usize]) -> FinitePoset {
        let mut pos = vec![usize::MAX; self.len()];
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &x) in sorted.iter().enumerate() {
            pos[x] = i;
        }
        let labels: Vec<String> = sorted.iter().map(|&x| self.labels[x].clone()).collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let pick = |list: &[u32]| -> Vec<u32> {
            list.iter().filter(|&&y| pos[y as usize] != usize::MAX).map(|&y| pos[y as usize] as u32).collect()
        };
        let above = sorted.iter().map(|&x| pick(&self.above[x])).collect();
        let below = sorted.iter().map(|&x| pick(&self.below[x])).collect();
        FinitePoset { labels, index, above, below }
    }

    /// `{x ∈ U : x < y}`.
    pub fn predecessors_within(&self, y: usize, within: &[usize]) -> Vec<usize> {
        within.iter().copied().filter(|&x| self.lt(x, y)).collect()
    }

    pub(crate) fn is_transitive(&self) -> bool {
        self.strict_pairs().all(|(x, y)| self.above[y].iter().all(|&z| self.lt(x, z as usize)))
    }

    /// Number of non-empty chains, by counting chains that start at each
    /// element and continue upward.
    pub fn chain_count(&self) -> u128 {
        let mut from = vec![0u128; self.len()];
        // any linear extension works; process elements with fewer elements above first
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.above[x].len());
        for x in order {
            from[x] = 1 + self.above[x].iter().map(|&y| from[y as usize]).fold(0u128, u128::saturating_add);
        }
        from.iter().fold(0u128, |a, &b| a.saturating_add(b))
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let mut from = vec![0usize; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.above[x].len());
        for x in order {
            from[x] = 1 + self.above[x].iter().map(|&y| from[y as usize]).max().unwrap_or(0);
        }
        from.into_iter().max().unwrap_or(0)
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("elements", &self.labels)
            .field("covers", &self.covers().iter().map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b])).collect::<Vec<_>>())
            .finish()
    }
}

pub fn build_poset<S, P>(elements: impl IntoIterator<Item = S>, strict_pairs: impl IntoIterator<Item = (P, P)>) -> Result<FinitePoset, PosetError>
where
    S: Into<String>,
    P: AsRef<str>,
{
    FinitePoset::build(elements, strict_pairs)
}

pub fn upset(p: &FinitePoset, set: &[usize]) -> Vec<usize> {
    p.upset(set)
}

/// Connected components of the comparability graph, each sorted, ordered by
/// least element.
pub fn discrete_type_classes(p: &FinitePoset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (x, y) in p.strict_pairs() {
        let (a, b) = (find(&mut parent, x), find(&mut parent, y));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for x in 0..n {
        let root = find(&mut parent, x);
        let i = *slot.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[i].push(x);
    }
    classes
}

/// Removes beat points until none are left (a core of the finite space).
///
/// `x` is a down beat point when the elements below it have a maximum, and an
/// up beat point when the elements above it have a minimum. Removing one is a
/// strong deformation retraction, so the order complexes of the poset and of
/// its core are homotopy equivalent. Returns the core and the removed
/// elements in removal order.
pub fn core_reduction(p: &FinitePoset) -> (FinitePoset, Vec<usize>) {
    let n = p.len();
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    // if a maximum of `set` exists it has strictly the most elements below it
    // globally, so only that candidate needs checking (dually for minima)
    let has_max = |set: &[usize]| -> bool {
        let m = *set.iter().max_by_key(|&&y| p.below(y).len()).unwrap();
        set.iter().all(|&b| b == m || p.lt(b, m))
    };
    let has_min = |set: &[usize]| -> bool {
        let m = *set.iter().max_by_key(|&&y| p.above(y).len()).unwrap();
        set.iter().all(|&b| b == m || p.lt(m, b))
    };
    loop {
        let mut changed = false;
        for x in 0..n {
            if !alive[x] {
                continue;
            }
            let down: Vec<usize> = p.below(x).iter().map(|&y| y as usize).filter(|&y| alive[y]).collect();
            let up: Vec<usize> = p.above(x).iter().map(|&y| y as usize).filter(|&y| alive[y]).collect();
            let beat = (!down.is_empty() && has_max(&down)) || (!up.is_empty() && has_min(&up));
            if beat {
                alive[x] = false;
                removed.push(x);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&x| alive[x]).collect();
    (p.induced(&keep), removed)
}

/// A finite poset with a strictly monotone map onto the elements of a finite
/// index poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirroredPoset {
    pub poset: FinitePoset,
    pub index_poset: FinitePoset,
    /// `mirror[x]` is the index element of `x`.
    pub mirror: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MirrorViolation {
    NotMonotone { lower: String, upper: String },
    EmptyFiber(String),
}

impl fmt::Display for MirrorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MirrorViolation::NotMonotone { lower, upper } => {
                write!(f, "monotonicity: {lower} < {upper} but their mirrors are not strictly ordered")
            }
            MirrorViolation::EmptyFiber(r) => write!(f, "non-empty fiber: stratum {r} is empty"),
        }
    }
}

impl MirroredPoset {
    pub fn new(poset: FinitePoset, index_poset: FinitePoset, mirror: Vec<usize>) -> Result<Self, PosetError> {
        if mirror.len() != poset.len() {
            return Err(PosetError::MirrorLength { expected: poset.len(), got: mirror.len() });
        }
        if let Some(&bad) = mirror.iter().find(|&&r| r >= index_poset.len()) {
            return Err(PosetError::UnknownElement(format!("index #{bad}")));
        }
        Ok(MirroredPoset { poset, index_poset, mirror })
    }

    /// Builds from labels: `mirror` maps element labels to index labels.
    pub fn from_labels<S: AsRef<str>>(poset: FinitePoset, index_poset: FinitePoset, mirror: &[(S, S)]) -> Result<Self, PosetError> {
        let mut map = vec![usize::MAX; poset.len()];
        for (x, r) in mirror {
            map[poset.index_of(x.as_ref())?] = index_poset.index_of(r.as_ref())?;
        }
        if let Some(x) = map.iter().position(|&r| r == usize::MAX) {
            return Err(PosetError::Parse { line: 0, msg: format!("no mirror for `{}`", poset.label(x)) });
        }
        Self::new(poset, index_poset, map)
    }

    /// The strata `X_r`, indexed like the index poset.
    pub fn strata(&self) -> Vec<Vec<usize>> {
        let mut strata = vec![Vec::new(); self.index_poset.len()];
        for (x, &r) in self.mirror.iter().enumerate() {
            strata[r].push(x);
        }
        strata
    }
}

/// Checks `x < y ⇒ μ(x) < μ(y)` and that every fiber is non-empty.
pub fn mirror_check(mp: &MirroredPoset) -> Result<(), MirrorViolation> {
    let p = &mp.poset;
    for (x, y) in p.strict_pairs() {
        if !mp.index_poset.lt(mp.mirror[x], mp.mirror[y]) {
            return Err(MirrorViolation::NotMonotone { lower: p.label(x).into(), upper: p.label(y).into() });
        }
    }
    for (r, stratum) in mp.strata().iter().enumerate() {
        if stratum.is_empty() {
            return Err(MirrorViolation::EmptyFiber(mp.index_poset.label(r).into()));
        }
    }
    Ok(())
}

/// Discrete analogues of the geometric-poset axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricReport {
    /// `(x, s)` with `μ(x) < s` but `↑x ∩ X_s` empty.
    pub a1_violations: Vec<(String, String)>,
    /// Singleton-basis form of A3: `{x' ∈ {x} : x' < y} = {x}` for all `y ∈ x^(s)`.
    pub a3_holds: bool,
}

impl GeometricReport {
    pub fn passed(&self) -> bool {
        self.a1_violations.is_empty() && self.a3_holds
    }

    /// Report lines; continuity and openness hold trivially in the discrete topology.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.a1_violations.is_empty() {
            out.push("A1 (non-empty x^(s)): pass".to_string());
        } else {
            for (x, s) in &self.a1_violations {
                out.push(format!("A1 (non-empty x^(s)): fail x={x} s={s}"));
            }
        }
        out.push("A2 (continuity): vacuous for discrete strata".to_string());
        out.push(format!("A3 (singleton basis): {}", if self.a3_holds { "pass" } else { "fail" }));
        out.push("Openness Property: vacuous for discrete strata".to_string());
        out
    }
}

pub fn geometric_discrete_check(mp: &MirroredPoset) -> GeometricReport {
    let p = &mp.poset;
    let strata = mp.strata();
    let mut a1_violations = Vec::new();
    let mut a3_holds = true;
    for x in 0..p.len() {
        let r = mp.mirror[x];
        for &s in mp.index_poset.above(r) {
            let s = s as usize;
            let xs: Vec<usize> = strata[s].iter().copied().filter(|&y| p.lt(x, y)).collect();
            if xs.is_empty() {
                a1_violations.push((p.label(x).to_string(), mp.index_poset.label(s).to_string()));
            }
            for y in xs {
                if p.predecessors_within(y, &[x]) != [x] {
                    a3_holds = false;
                }
            }
        }
    }
    GeometricReport { a1_violations, a3_holds }
}

fn parse_err(line: usize, msg: impl Into<String>) -> PosetError {
    PosetError::Parse { line, msg: msg.into() }
}

fn parse_rel(rest: &str, line: usize) -> Result<(String, String), PosetError> {
    let toks: Vec<&str> = rest.split_whitespace().collect();
    match toks[..] {
        [a, "<", b] => Ok((a.to_string(), b.to_string())),
        [a, ">", b] => Ok((b.to_string(), a.to_string())),
        _ => Err(parse_err(line, format!("expected `rel <a> < <b>`, got `rel {rest}`"))),
    }
}

/// Either a plain poset or a mirrored one, as read from a poset file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetFile {
    Plain(FinitePoset),
    Mirrored(MirroredPoset),
}

impl PosetFile {
    pub fn poset(&self) -> &FinitePoset {
        match self {
            PosetFile::Plain(p) => p,
            PosetFile::Mirrored(mp) => &mp.poset,
        }
    }
}

/// Parses the poset file format:
///
/// ```text
/// elem a
/// elem b
/// rel a < b
/// begin index
/// elem 1
/// end index
/// mirror a -> 1
/// ```
///
/// `#` starts a comment. The index block and `mirror` lines are optional.
pub fn parse_poset_file(text: &str) -> Result<PosetFile, PosetError> {
    let mut elems = Vec::new();
    let mut rels = Vec::new();
    let mut idx_elems = Vec::new();
    let mut idx_rels = Vec::new();
    let mut mirror = Vec::new();
    let mut in_index = false;
    let mut saw_index = false;
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match (kw, in_index) {
            ("begin", false) if rest == "index" => {
                in_index = true;
                saw_index = true;
            }
            ("end", true) if rest == "index" => in_index = false,
            ("elem", _) if !rest.is_empty() && !rest.contains(char::is_whitespace) => {
                if in_index { &mut idx_elems } else { &mut elems }.push(rest.to_string())
            }
            ("rel", _) => {
                let pair = parse_rel(rest, line_no)?;
                if in_index { &mut idx_rels } else { &mut rels }.push(pair)
            }
            ("mirror", false) => match rest.split_whitespace().collect::<Vec<_>>()[..] {
                [x, "->", r] => mirror.push((x.to_string(), r.to_string())),
                _ => return Err(parse_err(line_no, format!("expected `mirror <label> -> <index>`, got `{line}`"))),
            },
            _ => return Err(parse_err(line_no, format!("unrecognised line `{line}`"))),
        }
    }
    if in_index {
        return Err(parse_err(text.lines().count(), "unterminated index block"));
    }
    let poset = build_poset(elems, rels)?;
    if !saw_index && mirror.is_empty() {
        return Ok(PosetFile::Plain(poset));
    }
    let index_poset = build_poset(idx_elems, idx_rels)?;
    Ok(PosetFile::Mirrored(MirroredPoset::from_labels(poset, index_poset, &mirror)?))
}

fn write_elements(out: &mut String, p: &FinitePoset) {
    for l in p.labels() {
        out.push_str(&format!("elem {l}\n"));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!("rel {} < {}\n", p.label(a), p.label(b)));
    }
}

/// Writes a poset in the file format, listing cover relations only.
pub fn format_poset(p: &FinitePoset) -> String {
    let mut out = String::new();
    write_elements(&mut out, p);
    out
}

pub fn format_mirrored(mp: &MirroredPoset) -> String {
    let mut out = String::new();
    write_elements(&mut out, &mp.poset);
    out.push_str("begin index\n");
    write_elements(&mut out, &mp.index_poset);
    out.push_str("end index\n");
    for (x, &r) in mp.mirror.iter().enumerate() {
        out.push_str(&format!("mirror {} -> {}\n", mp.poset.label(x), mp.index_poset.label(r)));
    }
    out
}

impl fmt::Display for MirroredPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_mirrored(self))
    }
}

/// Labels of a set of element indices, joined for display.
pub fn label_set(p: &FinitePoset, set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|&i| p.label(i)).join(" "))
}
