//! Face lattices of polytopes built by point, pyramid, prism, bipyramid and
//! join. These count flags by brute force and serve as the oracle for
//! everything computed symbolically.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::flag::{table_len, FlagVector};
use crate::word::{GeneratorWord, Op};

/// A face: its vertex set and its dimension, assigned by the constructor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    verts: FixedBitSet,
    dim: i32,
}

impl Face {
    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn vertex_set(&self) -> &FixedBitSet {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.count_ones(..)
    }
}

/// An immutable face lattice, from the empty face (index 0) to the full face
/// (last index). Faces are sorted by dimension, then by vertex list.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    dim: i32,
    labels: Vec<usize>,
    faces: Vec<Face>,
    index: HashMap<FixedBitSet, usize>,
    below: OnceLock<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    n: i32,
    faces: Vec<FaceJson>,
}

#[derive(Serialize, Deserialize)]
struct FaceJson {
    verts: Vec<usize>,
    dim: i32,
}

type RawFaces = Vec<(Vec<usize>, i32)>;

impl FaceLattice {
    /// Assembles a lattice from labelled faces. Vertex labels are compacted to
    /// the labels of the 0-faces; other labels are dropped from every face.
    fn from_raw(dim: i32, raw: RawFaces) -> Result<Self, LatticeError> {
        let mut labels: Vec<usize> = raw.iter().filter(|(_, d)| *d == 0).flat_map(|(v, _)| v.iter().copied()).collect();
        labels.sort_unstable();
        labels.dedup();
        let position: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut faces: Vec<(Vec<usize>, i32)> = raw
            .into_iter()
            .map(|(verts, d)| {
                let mut v: Vec<usize> = verts.iter().filter_map(|l| position.get(l).copied()).collect();
                v.sort_unstable();
                v.dedup();
                (v, d)
            })
            .collect();
        faces.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        let n_verts = labels.len();
        let faces: Vec<Face> = faces
            .into_iter()
            .map(|(v, d)| {
                let mut bits = FixedBitSet::with_capacity(n_verts);
                bits.extend(v);
                Face { verts: bits, dim: d }
            })
            .collect();
        let mut index = HashMap::with_capacity(faces.len());
        for (i, f) in faces.iter().enumerate() {
            if index.insert(f.verts.clone(), i).is_some() {
                return Err(LatticeError::Invalid(format!("duplicate face {:?}", f.verts.ones().map(|v| labels[v]).collect::<Vec<_>>())));
            }
        }
        Ok(Self { dim, labels, faces, index, below: OnceLock::new() })
    }

    fn raw(&self) -> RawFaces {
        self.faces.iter().map(|f| (f.verts.ones().collect(), f.dim)).collect()
    }

    fn assemble(dim: i32, raw: RawFaces) -> Self {
        Self::from_raw(dim, raw).expect("constructors produce distinct faces")
    }

    pub fn point() -> Self {
        Self::assemble(0, vec![(vec![], -1), (vec![0], 0)])
    }

    pub fn pyramid(&self) -> Self {
        let apex = self.num_vertices();
        let mut raw = self.raw();
        let coned: RawFaces = raw
            .iter()
            .map(|(v, d)| {
                let mut v = v.clone();
                v.push(apex);
                (v, d + 1)
            })
            .collect();
        raw.extend(coned);
        Self::assemble(self.dim + 1, raw)
    }

    pub fn prism(&self) -> Self {
        let shift = self.num_vertices();
        let mut raw = vec![(vec![], -1)];
        for (v, d) in self.raw().into_iter().filter(|(v, _)| !v.is_empty()) {
            let top: Vec<usize> = v.iter().map(|x| x + shift).collect();
            let both: Vec<usize> = v.iter().copied().chain(top.iter().copied()).collect();
            raw.push((v, d));
            raw.push((top, d));
            raw.push((both, d + 1));
        }
        Self::assemble(self.dim + 1, raw)
    }

    pub fn bipyramid(&self) -> Self {
        let (p, q) = (self.num_vertices(), self.num_vertices() + 1);
        let mut raw = Vec::new();
        let mut full: Vec<usize> = vec![p, q];
        for (v, d) in self.raw().into_iter().filter(|(_, d)| *d < self.dim) {
            full.extend(v.iter().copied());
            let mut vp = v.clone();
            vp.push(p);
            let mut vq = v.clone();
            vq.push(q);
            raw.push((v, d));
            raw.push((vp, d + 1));
            raw.push((vq, d + 1));
        }
        full.sort_unstable();
        full.dedup();
        raw.push((full, self.dim + 1));
        Self::assemble(self.dim + 1, raw)
    }

    pub fn join(&self, other: &Self) -> Self {
        let shift = self.num_vertices();
        let right = other.raw();
        let mut raw = Vec::with_capacity(self.faces.len() * right.len());
        for (v1, d1) in self.raw() {
            for (v2, d2) in &right {
                let v: Vec<usize> = v1.iter().copied().chain(v2.iter().map(|x| x + shift)).collect();
                raw.push((v, d1 + d2 + 1));
            }
        }
        Self::assemble(self.dim + other.dim + 1, raw)
    }

    pub fn apply(&self, op: Op) -> Self {
        match op {
            Op::Cone => self.pyramid(),
            Op::Cylinder => self.prism(),
            Op::Bipyramid => self.bipyramid(),
        }
    }

    /// Folds the word's operators over the point, innermost first.
    pub fn build(word: &GeneratorWord) -> Self {
        word.application_order().fold(Self::point(), |l, op| l.apply(op))
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// External labels of a face's vertices.
    pub fn face_labels(&self, face: usize) -> Vec<usize> {
        self.faces[face].verts.ones().map(|v| self.labels[v]).collect()
    }

    pub fn full_face(&self) -> usize {
        self.faces.len() - 1
    }

    /// The face with exactly these (external) vertex labels.
    pub fn face_index(&self, verts: &[usize]) -> Result<usize, LatticeError> {
        let not_a_face = || LatticeError::NotAFace(verts.to_vec());
        let mut bits = FixedBitSet::with_capacity(self.num_vertices());
        for l in verts {
            let v = self.labels.binary_search(l).map_err(|_| not_a_face())?;
            bits.insert(v);
        }
        self.index.get(&bits).copied().ok_or_else(not_a_face)
    }

    /// Strict subfaces of each face, ascending by index (hence by dimension).
    fn below(&self) -> &[Vec<usize>] {
        self.below.get_or_init(|| {
            let mut containing: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices()];
            for (i, f) in self.faces.iter().enumerate() {
                for v in f.verts.ones() {
                    containing[v].push(i);
                }
            }
            let mut below: Vec<Vec<usize>> = vec![Vec::new(); self.faces.len()];
            for (g, face) in self.faces.iter().enumerate() {
                let candidates: Box<dyn Iterator<Item = usize>> = match face.verts.ones().min_by_key(|&v| containing[v].len()) {
                    Some(v) => Box::new(containing[v].iter().copied()),
                    None => Box::new(0..self.faces.len()),
                };
                for f in candidates {
                    if f != g && face.verts.is_subset(&self.faces[f].verts) {
                        below[f].push(g);
                    }
                }
            }
            for b in &mut below {
                b.sort_unstable();
            }
            below
        })
    }

    /// Strict subfaces of `face` with dimension `d`.
    fn subfaces_of_dim(&self, face: usize, d: i32) -> &[usize] {
        let b = &self.below()[face];
        let lo = b.partition_point(|&g| self.faces[g].dim < d);
        let hi = b.partition_point(|&g| self.faces[g].dim <= d);
        &b[lo..hi]
    }

    /// Flag vector of the interval strictly between `bottom` and the full
    /// face, with dimensions measured relative to `bottom`.
    fn interval_flag_vector(&self, bottom: usize) -> FlagVector {
        let base = self.faces[bottom].dim;
        let k = self.dim - base - 1;
        if k <= 0 {
            return FlagVector::new(k, vec![1]);
        }
        let k = k as usize;
        let full = self.full_face();
        let bottom_verts = &self.faces[bottom].verts;
        let mut layers: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut pos = vec![usize::MAX; self.faces.len()];
        for (i, f) in self.faces.iter().enumerate() {
            if i != full && f.dim > base && bottom_verts.is_subset(&f.verts) {
                let r = (f.dim - base - 1) as usize;
                pos[i] = layers[r].len();
                layers[r].push(i);
            }
        }
        let len = table_len(k as i32);
        let mut counts: Vec<Vec<i64>> = vec![Vec::new(); len];
        let mut entries = vec![0i64; len];
        entries[0] = 1;
        for mask in 1..len {
            let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = mask ^ (1 << top);
            let row: Vec<i64> = if rest == 0 {
                vec![1; layers[top].len()]
            } else {
                let next = usize::BITS as usize - 1 - rest.leading_zeros() as usize;
                let d = base + 1 + next as i32;
                let prev = &counts[rest];
                layers[top]
                    .iter()
                    .map(|&f| {
                        self.subfaces_of_dim(f, d)
                            .iter()
                            .filter(|&&g| pos[g] != usize::MAX)
                            .map(|&g| prev[pos[g]])
                            .sum()
                    })
                    .collect()
            };
            entries[mask] = row.iter().sum();
            counts[mask] = row;
        }
        FlagVector::new(k as i32, entries)
    }

    pub fn flag_vector(&self) -> FlagVector {
        self.interval_flag_vector(0)
    }

    /// Flag vector of the link along a nonempty face, given by its vertex
    /// labels. The full face yields the empty polytope.
    pub fn link_flag_vector(&self, verts: &[usize]) -> Result<FlagVector, LatticeError> {
        let i = self.face_index(verts)?;
        if i == 0 {
            return Err(LatticeError::NotAFace(verts.to_vec()));
        }
        Ok(self.interval_flag_vector(i))
    }

    /// Same as [`Self::link_flag_vector`] by face index.
    pub fn link_flag_vector_at(&self, face: usize) -> FlagVector {
        assert!(face > 0 && face < self.faces.len(), "not a nonempty face index");
        self.interval_flag_vector(face)
    }

    /// `[f_0, …, f_{n−1}]`.
    pub fn face_vector(&self) -> Vec<i64> {
        let mut f = vec![0i64; self.dim.max(0) as usize];
        for face in &self.faces {
            if face.dim >= 0 && face.dim < self.dim {
                f[face.dim as usize] += 1;
            }
        }
        f
    }

    pub fn satisfies_euler(&self) -> bool {
        let alt: i64 = self.face_vector().iter().enumerate().map(|(i, f)| if i % 2 == 0 { *f } else { -f }).sum();
        alt == 1 - if self.dim % 2 == 0 { 1 } else { -1 }
    }

    /// Number of edges at each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices()];
        for f in self.faces.iter().filter(|f| f.dim == 1) {
            for v in f.verts.ones() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Every vertex lies on exactly `n` edges.
    pub fn is_simple(&self) -> bool {
        self.vertex_degrees().iter().all(|&d| d as i32 == self.dim)
    }

    /// Pairwise intersection closure, checked through facets: every face is
    /// the meet of the facets containing it, and meeting any face with a
    /// facet lands on a face.
    pub fn is_intersection_closed(&self) -> bool {
        let full = self.full_face();
        let facets: Vec<&Face> = self.faces.iter().filter(|f| f.dim == self.dim - 1).collect();
        for (i, f) in self.faces.iter().enumerate() {
            if i != full {
                let mut meet = self.faces[full].verts.clone();
                for p in facets.iter().filter(|p| f.verts.is_subset(&p.verts)) {
                    meet.intersect_with(&p.verts);
                }
                if meet != f.verts {
                    return false;
                }
            }
            for p in &facets {
                let mut m = f.verts.clone();
                m.intersect_with(&p.verts);
                if !self.index.contains_key(&m) {
                    return false;
                }
            }
        }
        true
    }

    /// Pairwise intersection closure over all pairs.
    pub fn is_intersection_closed_exhaustive(&self) -> bool {
        self.faces.iter().all(|a| {
            self.faces.iter().all(|b| {
                let mut m = a.verts.clone();
                m.intersect_with(&b.verts);
                self.index.contains_key(&m)
            })
        })
    }

    /// Checks the structural invariants: a unique empty face and full face,
    /// vertices exactly the 0-faces, dimensions strictly increasing along
    /// containment, every cover raising dimension by one, and closure under
    /// intersection.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let bad = |m: String| Err(LatticeError::Invalid(m));
        let n = self.dim;
        if n < 0 {
            return bad(format!("dimension {n} is negative"));
        }
        let full = self.full_face();
        if self.faces.len() < 2 || self.faces[0].dim != -1 || self.faces[full].dim != n {
            return bad("the empty face and the full face are both required".into());
        }
        if self.faces[1].dim == -1 || self.faces[full - 1].dim == n {
            return bad("the empty and full faces must be unique".into());
        }
        if self.faces[0].vertex_count() != 0 {
            return bad("the dimension -1 face must be empty".into());
        }
        if self.faces[full].vertex_count() != self.num_vertices() {
            return bad("the full face must contain every vertex".into());
        }
        for (i, f) in self.faces.iter().enumerate() {
            if f.dim < -1 || f.dim > n {
                return bad(format!("face {:?} has dimension {} outside -1..={n}", self.face_labels(i), f.dim));
            }
            if f.dim == 0 && f.vertex_count() != 1 {
                return bad(format!("0-face {:?} is not a single vertex", self.face_labels(i)));
            }
            if f.dim > 0 && f.vertex_count() <= f.dim as usize {
                return bad(format!("face {:?} has too few vertices for dimension {}", self.face_labels(i), f.dim));
            }
        }
        let below = self.below();
        for (i, f) in self.faces.iter().enumerate() {
            if let Some(&g) = below[i].iter().find(|&&g| self.faces[g].dim >= f.dim) {
                return bad(format!("face {:?} contains {:?} of no smaller dimension", self.face_labels(i), self.face_labels(g)));
            }
            // subfaces of subfaces; whatever is left over is covered by `f`
            let mut inner = FixedBitSet::with_capacity(self.faces.len());
            for &h in &below[i] {
                inner.extend(below[h].iter().copied());
            }
            for &g in below[i].iter().filter(|&&g| !inner.contains(g)) {
                if self.faces[g].dim != f.dim - 1 {
                    return bad(format!(
                        "face {:?} covers {:?} with a dimension jump of {}",
                        self.face_labels(i),
                        self.face_labels(g),
                        f.dim - self.faces[g].dim
                    ));
                }
            }
        }
        if !self.is_intersection_closed() {
            return bad("faces are not closed under intersection".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let data = LatticeJson {
            n: self.dim,
            faces: (0..self.faces.len()).map(|i| FaceJson { verts: self.face_labels(i), dim: self.faces[i].dim }).collect(),
        };
        serde_json::to_value(data).expect("lattice serializes")
    }

    /// Parses `{"n": .., "faces": [{"verts": [..], "dim": d}, ..]}` and
    /// validates it.
    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let data: LatticeJson = serde_json::from_str(text)?;
        let mut labels: Vec<usize> = data.faces.iter().filter(|f| f.dim == 0).flat_map(|f| f.verts.iter().copied()).collect();
        labels.sort_unstable();
        labels.dedup();
        for f in &data.faces {
            if let Some(v) = f.verts.iter().find(|v| labels.binary_search(v).is_err()) {
                return Err(LatticeError::Invalid(format!("vertex {v} of face {:?} is not a 0-face", f.verts)));
            }
        }
        let lattice = Self::from_raw(data.n, data.faces.into_iter().map(|f| (f.verts, f.dim)).collect())?;
        lattice.validate()?;
        Ok(lattice)
    }
}
