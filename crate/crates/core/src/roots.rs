//! Root systems with their bilinear forms, the bundled simple systems,
//! edge multiplicities, node styles and labelled Dynkin diagrams with
//! labels a_i = (ad h eigenvalue of the root vector of alpha_i).
//!
//! Simple systems adapted to a grading element h are enumerated directly:
//! every positive system of the null subsystem Phi(0) extends the fixed
//! positive part Phi(>0), and the indecomposable elements of the union
//! form the simple roots. Duplicate labelled diagrams are folded away,
//! which reproduces the conjugacy-class lists.

use crate::error::Error;
use crate::scalar::{int, rat, Rational, Scalar};
use crate::superalg::{Element, Parity, SuperAlgebra};
use crate::AlgebraId;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub coords: Vec<Rational>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVector::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn from_halves(twice: &[i64]) -> Self {
        WeightVector::new(twice.iter().map(|&c| rat(c, 2)).collect())
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(crate::scalar::fmt_rational)
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct Root {
    pub weight: WeightVector,
    pub vector_name: String,
    pub parity: Parity,
}

/// Root system with its Gram form and the root-vector assignment.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub algebra: AlgebraId,
    pub coords: usize,
    pub gram: Vec<Vec<Scalar>>,
    pub roots: Vec<Root>,
    /// Cartan basis names with evaluation rows: alpha(t_k) = sum_c
    /// alpha.coords[c] * eval[k][c].
    pub cartan: Vec<(String, Vec<Rational>)>,
    /// Sample point for sign decisions over Q(alpha) (the alpha > 0 chamber).
    pub sample: Rational,
}

impl RootSystem {
    pub fn inner(&self, a: &WeightVector, b: &WeightVector) -> Scalar {
        let zero = int(0);
        let mut acc = Scalar::zero();
        for (i, x) in a.coords.iter().enumerate() {
            if *x == zero {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if *y == zero || self.gram[i][j].is_zero() {
                    continue;
                }
                acc = acc + Scalar::Rat(x * y) * &self.gram[i][j];
            }
        }
        acc
    }

    pub fn norm(&self, a: &WeightVector) -> Scalar {
        self.inner(a, a)
    }

    pub fn find_root(&self, w: &WeightVector) -> Option<&Root> {
        self.roots.iter().find(|r| &r.weight == w)
    }

    pub fn is_root(&self, w: &WeightVector) -> bool {
        self.find_root(w).is_some()
    }

    /// min over non-isotropic roots of |(alpha, alpha)|, compared as
    /// functions near the sample point.
    pub fn min_nonzero_norm(&self) -> Scalar {
        let mut best: Option<Scalar> = None;
        for r in &self.roots {
            let n = self.norm(&r.weight);
            if n.is_zero() {
                continue;
            }
            let a = n.abs_at_sample(&self.sample);
            best = Some(match best {
                None => a,
                Some(b) => {
                    if a.cmp_at_sample(&b, &self.sample) == std::cmp::Ordering::Less {
                        a
                    } else {
                        b
                    }
                }
            });
        }
        best.expect("root system has non-isotropic roots")
    }

    /// ad h eigenvalue of the root vector of `w`; errors when the vector
    /// is not an eigenvector.
    pub fn label_of(
        &self,
        g: &SuperAlgebra,
        h: &Element,
        w: &WeightVector,
    ) -> Result<Scalar, Error> {
        let root = self
            .find_root(w)
            .ok_or_else(|| Error::NotEigenvector(format!("{w} is not a root")))?;
        let idx = g
            .index_of(&root.vector_name)
            .unwrap_or_else(|| panic!("root vector {} missing", root.vector_name));
        let v = g.basis_element(&root.vector_name);
        let br = g.bracket(h, &v)?;
        let lambda = br.coords[idx].clone();
        for (k, c) in br.coords.iter().enumerate() {
            if k != idx && !c.is_zero() {
                return Err(Error::NotEigenvector(root.vector_name.clone()));
            }
        }
        Ok(lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NodeStyle {
    White,
    Grey,
    Black,
}

impl NodeStyle {
    pub fn glyph(&self) -> char {
        match self {
            NodeStyle::White => 'o',
            NodeStyle::Grey => 'x',
            NodeStyle::Black => '*',
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiagNode {
    pub root: WeightVector,
    pub style: NodeStyle,
    pub label: Scalar,
}

#[derive(Debug, Clone)]
pub struct DiagEdge {
    pub i: usize,
    pub j: usize,
    pub mu: Scalar,
    /// (from, to) when the literal arrow rule fires; None otherwise.
    pub arrow: Option<(usize, usize)>,
    /// mu is not a natural number: the edge carries the symbolic label
    /// and no multiplicity lines.
    pub labelled_edge: bool,
    /// both arrow clauses or neither applied while mu > 1.
    pub ambiguous_arrow: bool,
}

#[derive(Debug, Clone)]
pub struct LabelledDiagram {
    pub nodes: Vec<DiagNode>,
    pub edges: Vec<DiagEdge>,
}

impl LabelledDiagram {
    pub fn labels(&self) -> Vec<Scalar> {
        self.nodes.iter().map(|n| n.label.clone()).collect()
    }

    pub fn integer_labels(&self) -> Option<Vec<i64>> {
        self.nodes
            .iter()
            .map(|n| {
                n.label
                    .as_rational()
                    .filter(|r| r.is_integer())
                    .and_then(|r| i64::try_from(r.numer()).ok())
            })
            .collect()
    }

    pub fn edge_between(&self, i: usize, j: usize) -> Option<&DiagEdge> {
        self.edges
            .iter()
            .find(|e| (e.i, e.j) == (i, j) || (e.i, e.j) == (j, i))
    }

    pub fn mu_between(&self, i: usize, j: usize) -> Scalar {
        self.edge_between(i, j)
            .map(|e| e.mu.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Deterministic text rendering: one line of node glyphs with labels,
    /// then the edge list.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let nodes: Vec<String> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| format!("{}{}[{}]", n.style.glyph(), i + 1, n.label))
            .collect();
        out.push_str(&nodes.join(" "));
        for e in &self.edges {
            let arrow = match e.arrow {
                Some((a, b)) => format!(" arrow {}->{}", a + 1, b + 1),
                None => String::new(),
            };
            let kind = if e.labelled_edge { " (labelled)" } else { "" };
            let flag = if e.ambiguous_arrow { " (flagged)" } else { "" };
            out.push_str(&format!(
                "\n  {}-{} mu={}{}{}{}",
                e.i + 1,
                e.j + 1,
                e.mu,
                kind,
                arrow,
                flag
            ));
        }
        out
    }

    /// Canonical key over node permutations, labels included.
    pub fn canonical_key(&self) -> String {
        self.min_key(true)
    }

    /// Canonical key with labels ignored (diagram shape only).
    pub fn shape_key(&self) -> String {
        self.min_key(false)
    }

    fn min_key(&self, with_labels: bool) -> String {
        let n = self.nodes.len();
        let mut best: Option<String> = None;
        for perm in permutations(n) {
            let key = self.key_for(&perm, with_labels);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap_or_default()
    }

    /// Encoding of the diagram with node i renamed to perm[i].
    fn key_for(&self, perm: &[usize], with_labels: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| perm[i]);
        for &i in &order {
            let n = &self.nodes[i];
            if with_labels {
                parts.push(format!("{}:{}", n.style.glyph(), n.label));
            } else {
                parts.push(format!("{}", n.style.glyph()));
            }
        }
        let mut edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.i].min(perm[e.j]), perm[e.i].max(perm[e.j]));
                let arrow = match e.arrow {
                    Some((x, y)) => format!(">{}-{}", perm[x], perm[y]),
                    None => "".into(),
                };
                format!("{a}-{b}:{}:{}{}", e.mu, e.labelled_edge, arrow)
            })
            .collect();
        edges.sort();
        format!("[{}]({})", parts.join(","), edges.join(";"))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// The edge-multiplicity formula. `ctx_min` is min_{(a_k,a_k) != 0}
/// |(a_k, a_k)| over the full root system.
pub fn mu(
    sys: &RootSystem,
    ai: &WeightVector,
    aj: &WeightVector,
    ctx_min: &Scalar,
) -> Result<Scalar, Error> {
    let ip = sys.inner(ai, aj);
    if ip.is_zero() {
        return Ok(Scalar::zero());
    }
    let (ni, nj) = (sys.norm(ai), sys.norm(aj));
    let abs_ip = chamber_abs(&ip, &sys.sample)?;
    if ni.is_zero() && nj.is_zero() {
        Ok(abs_ip)
    } else if !ni.is_zero() && !nj.is_zero() {
        let (ai_abs, aj_abs) = (
            chamber_abs(&ni, &sys.sample)?,
            chamber_abs(&nj, &sys.sample)?,
        );
        let local_min = if ai_abs.cmp_at_sample(&aj_abs, &sys.sample) == std::cmp::Ordering::Less
        {
            ai_abs
        } else {
            aj_abs
        };
        (Scalar::from_int(2) * abs_ip).field_div(&local_min)
    } else {
        (Scalar::from_int(2) * abs_ip).field_div(ctx_min)
    }
}

/// |f| with the sign decided on the alpha > 0 chamber; errors when the
/// sign is not constant across the probe points.
fn chamber_abs(f: &Scalar, sample: &Rational) -> Result<Scalar, Error> {
    if f.as_rational().is_some() {
        return Ok(f.abs_at_sample(sample));
    }
    let probes = [rat(1, 3), rat(1, 2), int(1), int(2), int(3)];
    let signs: Vec<i32> = probes
        .iter()
        .filter_map(|p| match f.eval_at(p) {
            Ok(v) if !num_traits::Zero::is_zero(&v) => {
                Some(if num_traits::Signed::is_positive(&v) { 1 } else { -1 })
            }
            _ => None,
        })
        .collect();
    if signs.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::SymbolicSign(f.to_string()));
    }
    Ok(f.abs_at_sample(sample))
}

/// Assemble the labelled diagram for a simple system and grading element.
pub fn label_diagram(
    g: &SuperAlgebra,
    sys: &RootSystem,
    pi: &[WeightVector],
    h: &Element,
) -> Result<LabelledDiagram, Error> {
    let ctx_min = sys.min_nonzero_norm();
    let mut nodes = Vec::new();
    for w in pi {
        let root = sys
            .find_root(w)
            .ok_or_else(|| Error::NotEigenvector(format!("{w} is not a root")))?;
        let label = sys.label_of(g, h, w)?;
        let style = match (root.parity, sys.norm(w).is_zero()) {
            (Parity::Even, _) => NodeStyle::White,
            (Parity::Odd, true) => NodeStyle::Grey,
            (Parity::Odd, false) => NodeStyle::Black,
        };
        nodes.push(DiagNode {
            root: w.clone(),
            style,
            label,
        });
    }
    let mut edges = Vec::new();
    for i in 0..pi.len() {
        for j in i + 1..pi.len() {
            let m = mu(sys, &pi[i], &pi[j], &ctx_min)?;
            if m.is_zero() {
                continue;
            }
            let labelled_edge = m.as_natural().is_none();
            let (arrow, ambiguous) = if labelled_edge || m.as_natural() == Some(1) {
                (None, false)
            } else {
                arrow_rule(sys, &pi[i], &pi[j], i, j)
            };
            edges.push(DiagEdge {
                i,
                j,
                mu: m,
                arrow,
                labelled_edge,
                ambiguous_arrow: ambiguous,
            });
        }
    }
    Ok(LabelledDiagram { nodes, edges })
}

/// The literal arrow rule for mu > 1: between two non-isotropic roots the
/// arrow points from the larger (a,a) to the smaller; between an isotropic
/// a_i and a non-isotropic a_j it points i -> j when |(a_j,a_j)| < 2 and
/// j -> i when |(a_j,a_j)| > 2. The boundary |(a_j,a_j)| = 2 fires neither
/// clause and is flagged.
fn arrow_rule(
    sys: &RootSystem,
    a: &WeightVector,
    b: &WeightVector,
    i: usize,
    j: usize,
) -> (Option<(usize, usize)>, bool) {
    let (na, nb) = (sys.norm(a), sys.norm(b));
    let sample = &sys.sample;
    if na.is_zero() && nb.is_zero() {
        // neither clause mentions a pair of isotropic roots
        (None, false)
    } else if !na.is_zero() && !nb.is_zero() {
        match na.cmp_at_sample(&nb, sample) {
            std::cmp::Ordering::Greater => (Some((i, j)), false),
            std::cmp::Ordering::Less => (Some((j, i)), false),
            std::cmp::Ordering::Equal => (None, true),
        }
    } else {
        let (iso, noniso, niso_norm) = if na.is_zero() {
            (i, j, nb)
        } else {
            (j, i, na)
        };
        let abs = niso_norm.abs_at_sample(sample);
        match abs.cmp_at_sample(&Scalar::from_int(2), sample) {
            std::cmp::Ordering::Less => (Some((iso, noniso)), false),
            std::cmp::Ordering::Greater => (Some((noniso, iso)), false),
            std::cmp::Ordering::Equal => (None, true),
        }
    }
}

/// Build the root system of an algebra. For D(2,1;alpha) the Gram form
/// carries the given alpha (symbolic by default).
pub fn root_system(alg: AlgebraId, alpha: &Scalar) -> RootSystem {
    match alg {
        AlgebraId::D21 => d21_roots(alpha),
        AlgebraId::G3 => g3_roots(),
        AlgebraId::F4 => f4_roots(),
    }
}

fn d21_roots(alpha: &Scalar) -> RootSystem {
    let half = Scalar::from_rat(1, 2);
    let gram = vec![
        vec![half.clone(), Scalar::zero(), Scalar::zero()],
        vec![
            Scalar::zero(),
            -(&half * &(Scalar::one() + alpha.clone())),
            Scalar::zero(),
        ],
        vec![Scalar::zero(), Scalar::zero(), &half * alpha],
    ];
    let mut roots = Vec::new();
    for (slot, names) in [("E1", "F1"), ("E2", "F2"), ("E3", "F3")].iter().enumerate() {
        let mut w = [0i64; 3];
        w[slot] = 2;
        roots.push(Root {
            weight: WeightVector::from_ints(&w),
            vector_name: names.0.to_string(),
            parity: Parity::Even,
        });
        w[slot] = -2;
        roots.push(Root {
            weight: WeightVector::from_ints(&w),
            vector_name: names.1.to_string(),
            parity: Parity::Even,
        });
    }
    for i in [1i64, -1] {
        for j in [1i64, -1] {
            for k in [1i64, -1] {
                roots.push(Root {
                    weight: WeightVector::from_ints(&[i, j, k]),
                    vector_name: format!("v({i},{j},{k})"),
                    parity: Parity::Odd,
                });
            }
        }
    }
    RootSystem {
        algebra: AlgebraId::D21,
        coords: 3,
        gram,
        roots,
        cartan: vec![
            ("H1".into(), vec![int(1), int(0), int(0)]),
            ("H2".into(), vec![int(0), int(1), int(0)]),
            ("H3".into(), vec![int(0), int(0), int(1)]),
        ],
        sample: int(1),
    }
}

fn g3_roots() -> RootSystem {
    let gram = vec![
        vec![Scalar::from_int(2), Scalar::zero(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::from_int(-2), Scalar::one()],
        vec![Scalar::zero(), Scalar::one(), Scalar::from_int(-2)],
    ];
    // coordinates (delta, eps1, eps2) with eps3 = -eps1 - eps2
    let mut roots = vec![
        Root {
            weight: WeightVector::from_ints(&[2, 0, 0]),
            vector_name: "E".into(),
            parity: Parity::Even,
        },
        Root {
            weight: WeightVector::from_ints(&[-2, 0, 0]),
            vector_name: "F".into(),
            parity: Parity::Even,
        },
    ];
    let g2_positive: [(&str, [i64; 2]); 6] = [
        ("x1", [1, 0]),  // eps1
        ("x2", [-1, 1]), // eps2 - eps1
        ("x3", [0, 1]),  // eps2
        ("x4", [1, 1]),  // -eps3
        ("x5", [2, 1]),  // eps1 - eps3
        ("x6", [1, 2]),  // eps2 - eps3
    ];
    for (i, (xname, w)) in g2_positive.iter().enumerate() {
        roots.push(Root {
            weight: WeightVector::from_ints(&[0, w[0], w[1]]),
            vector_name: xname.to_string(),
            parity: Parity::Even,
        });
        roots.push(Root {
            weight: WeightVector::from_ints(&[0, -w[0], -w[1]]),
            vector_name: format!("y{}", i + 1),
            parity: Parity::Even,
        });
    }
    // odd roots: v(i,j) has weight i*delta + weight(e_j); the basis vector
    // e_j carries eps_j for j in {2,1,-1,-2}, e_{3} carries -eps3, e_{-3}
    // carries eps3, and e_0 is a zero-weight vector.
    let e_weight = |j: i32| -> [i64; 2] {
        match j {
            3 => [1, 1], // -eps3 = eps1 + eps2
            2 => [0, 1],
            1 => [1, 0],
            0 => [0, 0],
            -1 => [-1, 0],
            -2 => [0, -1],
            -3 => [-1, -1],
            _ => unreachable!(),
        }
    };
    for i in [1i64, -1] {
        for j in [3, 2, 1, 0, -1, -2, -3] {
            let w = e_weight(j);
            roots.push(Root {
                weight: WeightVector::from_ints(&[i, w[0], w[1]]),
                vector_name: format!("v({i},{j})"),
                parity: Parity::Odd,
            });
        }
    }
    RootSystem {
        algebra: AlgebraId::G3,
        coords: 3,
        gram,
        roots,
        cartan: vec![
            ("H".into(), vec![int(1), int(0), int(0)]),
            ("h1".into(), vec![int(0), int(2), int(-1)]),
            ("h2".into(), vec![int(0), int(-1), int(1)]),
        ],
        sample: int(1),
    }
}

fn f4_roots() -> RootSystem {
    let mut gram = vec![vec![Scalar::zero(); 4]; 4];
    gram[0][0] = Scalar::from_int(-6);
    for (i, row) in gram.iter_mut().enumerate().skip(1) {
        row[i] = Scalar::from_int(2);
    }
    let mut roots = vec![
        Root {
            weight: WeightVector::from_ints(&[1, 0, 0, 0]),
            vector_name: "E".into(),
            parity: Parity::Even,
        },
        Root {
            weight: WeightVector::from_ints(&[-1, 0, 0, 0]),
            vector_name: "F".into(),
            parity: Parity::Even,
        },
    ];
    let mut push_even = |w: [i64; 4], name: String| {
        roots.push(Root {
            weight: WeightVector::from_ints(&w),
            vector_name: name,
            parity: Parity::Even,
        });
    };
    for i in 1..=3usize {
        for j in 1..=3usize {
            if i == j {
                continue;
            }
            let mut w = [0i64; 4];
            w[i] = 1;
            w[j] = -1;
            push_even(w, format!("R({i},-{j})"));
        }
    }
    for (i, j) in [(1usize, 2usize), (1, 3), (2, 3)] {
        let mut w = [0i64; 4];
        w[i] = 1;
        w[j] = 1;
        push_even(w, format!("R({i},{j})"));
        let mut w = [0i64; 4];
        w[i] = -1;
        w[j] = -1;
        push_even(w, format!("R(-{j},-{i})"));
    }
    for i in 1..=3usize {
        let mut w = [0i64; 4];
        w[i] = 1;
        push_even(w, format!("R({i},0)"));
        w[i] = -1;
        push_even(w, format!("R(-{i},0)"));
    }
    for i in [1i64, -1] {
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                for s3 in [1i64, -1] {
                    let sig: String = [s1, s2, s3]
                        .iter()
                        .map(|&s| if s > 0 { '+' } else { '-' })
                        .collect();
                    roots.push(Root {
                        weight: WeightVector::from_halves(&[i, s1, s2, s3]),
                        vector_name: format!("v({i},{sig})"),
                        parity: Parity::Odd,
                    });
                }
            }
        }
    }
    RootSystem {
        algebra: AlgebraId::F4,
        coords: 4,
        gram,
        roots,
        cartan: vec![
            ("H".into(), vec![int(2), int(0), int(0), int(0)]),
            ("R(1,-1)".into(), vec![int(0), int(1), int(0), int(0)]),
            ("R(2,-2)".into(), vec![int(0), int(0), int(1), int(0)]),
            ("R(3,-3)".into(), vec![int(0), int(0), int(0), int(1)]),
        ],
        sample: int(1),
    }
}

/// A bundled simple system with its figure name.
#[derive(Debug, Clone)]
pub struct SimpleSystem {
    pub name: String,
    pub roots: Vec<WeightVector>,
}

/// The figure systems from the Dynkin-diagram tables.
pub fn figures(alg: AlgebraId) -> Vec<SimpleSystem> {
    let ints = |name: &str, rows: &[&[i64]]| SimpleSystem {
        name: name.into(),
        roots: rows.iter().map(|r| WeightVector::from_ints(r)).collect(),
    };
    match alg {
        AlgebraId::D21 => vec![
            ints("fig4.1", &[&[2, 0, 0], &[-1, 1, -1], &[0, 0, 2]]),
            ints("fig4.2", &[&[2, 0, 0], &[-1, -1, 1], &[0, 2, 0]]),
            ints("fig4.3", &[&[0, 0, 2], &[1, -1, -1], &[0, 2, 0]]),
            ints("fig4.4", &[&[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]]),
        ],
        AlgebraId::G3 => vec![
            ints("fig5.1", &[&[1, -1, -1], &[0, 1, 0], &[0, -1, 1]]),
            ints("fig5.2", &[&[-1, 1, 1], &[1, 0, -1], &[0, -1, 1]]),
            ints("fig5.3", &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 1]]),
            ints("fig5.4", &[&[0, 1, 0], &[-1, 0, 1], &[1, -1, 0]]),
        ],
        AlgebraId::F4 => vec![
            SimpleSystem {
                name: "fig6.1".into(),
                roots: vec![
                    WeightVector::from_halves(&[1, -1, -1, -1]),
                    WeightVector::from_ints(&[0, 0, 0, 1]),
                    WeightVector::from_ints(&[0, 0, 1, -1]),
                    WeightVector::from_ints(&[0, 1, -1, 0]),
                ],
            },
            SimpleSystem {
                name: "fig6.2".into(),
                roots: vec![
                    WeightVector::from_halves(&[-1, 1, 1, 1]),
                    WeightVector::from_halves(&[1, -1, -1, 1]),
                    WeightVector::from_ints(&[0, 0, 1, -1]),
                    WeightVector::from_ints(&[0, 1, -1, 0]),
                ],
            },
            SimpleSystem {
                name: "fig6.3".into(),
                roots: vec![
                    WeightVector::from_ints(&[0, 1, -1, 0]),
                    WeightVector::from_halves(&[1, -1, 1, -1]),
                    WeightVector::from_halves(&[-1, 1, 1, -1]),
                    WeightVector::from_ints(&[0, 0, 0, 1]),
                ],
            },
            SimpleSystem {
                name: "fig6.4".into(),
                roots: vec![
                    WeightVector::from_halves(&[1, 1, -1, -1]),
                    WeightVector::from_halves(&[1, -1, 1, 1]),
                    WeightVector::from_halves(&[-1, 1, -1, 1]),
                    WeightVector::from_ints(&[0, 0, 1, -1]),
                ],
            },
            SimpleSystem {
                name: "fig6.5".into(),
                roots: vec![
                    WeightVector::from_ints(&[1, 0, 0, 0]),
                    WeightVector::from_halves(&[-1, 1, -1, -1]),
                    WeightVector::from_ints(&[0, 0, 0, 1]),
                    WeightVector::from_ints(&[0, 0, 1, -1]),
                ],
            },
            SimpleSystem {
                name: "fig6.6".into(),
                roots: vec![
                    WeightVector::from_ints(&[1, 0, 0, 0]),
                    WeightVector::from_halves(&[-1, -1, 1, 1]),
                    WeightVector::from_ints(&[0, 1, -1, 0]),
                    WeightVector::from_ints(&[0, 0, 1, -1]),
                ],
            },
        ],
    }
}

/// The per-orbit simple systems spelled out in the worked examples,
/// keyed by case name.
pub fn per_orbit_systems(alg: AlgebraId) -> Vec<(String, SimpleSystem)> {
    let sys = |name: &str, roots: Vec<WeightVector>| SimpleSystem {
        name: name.into(),
        roots,
    };
    match alg {
        AlgebraId::D21 => {
            let f = figures(alg);
            vec![
                ("E1+E2".into(), sys("Pi1", f[0].roots.clone())),
                ("E1+E2".into(), sys("Pi2", f[2].roots.clone())),
                ("E1+E2".into(), sys("Pi3", f[3].roots.clone())),
            ]
        }
        AlgebraId::G3 => vec![
            (
                "E+x2".into(),
                sys(
                    "Pi1",
                    vec![
                        WeightVector::from_ints(&[0, 1, 1]),   // -eps3
                        WeightVector::from_ints(&[-1, -1, 0]), // -delta-eps1
                        WeightVector::from_ints(&[1, -1, -1]), // delta+eps3
                    ],
                ),
            ),
            (
                "E+x2".into(),
                sys(
                    "Pi2",
                    vec![
                        WeightVector::from_ints(&[-1, 0, 1]),  // -delta+eps2
                        WeightVector::from_ints(&[1, 1, 0]),   // delta+eps1
                        WeightVector::from_ints(&[0, -2, -1]), // eps3-eps1
                    ],
                ),
            ),
            (
                "E+x2".into(),
                sys(
                    "Pi3",
                    vec![
                        WeightVector::from_ints(&[1, 0, -1]),  // delta-eps2
                        WeightVector::from_ints(&[0, 1, 1]),   // -eps3
                        WeightVector::from_ints(&[0, -2, -1]), // eps3-eps1
                    ],
                ),
            ),
        ],
        AlgebraId::F4 => {
            let f = figures(alg);
            vec![
                ("e(7)".into(), sys("Pi1", f[3].roots.clone())),
                ("e(7)".into(), sys("Pi2", f[4].roots.clone())),
                ("e(7)".into(), sys("Pi3", f[5].roots.clone())),
            ]
        }
    }
}

/// All bundled systems: figures plus the per-orbit constructions.
pub fn simple_systems(alg: AlgebraId) -> Vec<SimpleSystem> {
    let mut out = figures(alg);
    for (case, mut sys) in per_orbit_systems(alg) {
        sys.name = format!("{}@{}", sys.name, case);
        out.push(sys);
    }
    out
}

/// Enumerate the labelled Dynkin diagrams adapted to h: all positive
/// systems of Phi(0) extended by Phi(>0), deduplicated by diagram content.
/// Returns each distinct diagram with one witnessing simple system.
pub fn adapted_diagrams(
    g: &SuperAlgebra,
    sys: &RootSystem,
    h: &Element,
) -> Result<Vec<(Vec<WeightVector>, LabelledDiagram)>, Error> {
    let mut zero_pairs: Vec<WeightVector> = Vec::new();
    let mut positives: Vec<WeightVector> = Vec::new();
    let mut all_zero = true;
    for r in &sys.roots {
        let lambda = sys.label_of(g, h, &r.weight)?;
        let lr = lambda.as_rational().ok_or_else(|| {
            Error::NotEigenvector(format!("non-rational eigenvalue on {}", r.vector_name))
        })?;
        if num_traits::Zero::is_zero(&lr) {
            if !zero_pairs.contains(&r.weight.neg()) {
                zero_pairs.push(r.weight.clone());
            }
        } else {
            all_zero = false;
            if num_traits::Signed::is_positive(&lr) {
                positives.push(r.weight.clone());
            }
        }
    }

    // h = 0: every figure system is already adapted and all labels vanish
    if all_zero {
        let mut out = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for fig in figures(sys.algebra) {
            let d = label_diagram(g, sys, &fig.roots, h)?;
            if seen.insert(d.canonical_key()) {
                out.push((fig.roots, d));
            }
        }
        return Ok(out);
    }

    let n = zero_pairs.len();
    assert!(n <= 12, "null subsystem too large to enumerate");
    let mut out: Vec<(Vec<WeightVector>, LabelledDiagram)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..(1u32 << n) {
        let p: Vec<WeightVector> = zero_pairs
            .iter()
            .enumerate()
            .map(|(k, w)| {
                if mask & (1 << k) != 0 {
                    w.neg()
                } else {
                    w.clone()
                }
            })
            .collect();
        let closed = (0..p.len()).all(|a| {
            (a..p.len()).all(|b| {
                let s = p[a].add(&p[b]);
                !sys.is_root(&s) || p.contains(&s)
            })
        });
        if !closed {
            continue;
        }
        let mut plus = positives.clone();
        plus.extend(p);
        let simple: Vec<WeightVector> = plus
            .iter()
            .filter(|gamma| {
                !(0..plus.len())
                    .any(|a| (a..plus.len()).any(|b| plus[a].add(&plus[b]) == **gamma))
            })
            .cloned()
            .collect();
        assert_eq!(
            simple.len(),
            sys.algebra.rank(),
            "adapted system has wrong rank"
        );
        let d = label_diagram(g, sys, &simple, h)?;
        if seen.insert(d.canonical_key()) {
            out.push((simple, d));
        }
    }
    Ok(out)
}

/// Match a computed diagram against the bundled figures: returns the
/// figure name together with the labels reordered to the figure's nodes.
/// Errors unless exactly one (figure, labels) pair matches.
pub fn match_figure(
    sys: &RootSystem,
    g: &SuperAlgebra,
    d: &LabelledDiagram,
) -> Result<(String, Vec<i64>), Error> {
    let zero_h = g.zero();
    let mut hits: Vec<(String, Vec<i64>)> = Vec::new();
    for fig in figures(sys.algebra) {
        let fd = label_diagram(g, sys, &fig.roots, &zero_h)?;
        if fd.shape_key() != d.shape_key() {
            continue;
        }
        let n = d.nodes.len();
        let ints = d
            .integer_labels()
            .ok_or_else(|| Error::BadLadder("diagram labels are not integers".into()))?;
        for perm in permutations(n) {
            if permutation_matches(d, &fd, &perm) {
                let mut labels = vec![0i64; n];
                for (orig, &target) in perm.iter().enumerate() {
                    labels[target] = ints[orig];
                }
                if !hits.iter().any(|(f, l)| *f == fig.name && *l == labels) {
                    hits.push((fig.name.clone(), labels));
                }
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.remove(0)),
        0 => Err(Error::BadLadder(format!(
            "diagram matches no bundled figure: {}",
            d.render_text()
        ))),
        _ => Err(Error::BadLadder(format!(
            "diagram matches several figures/labelings: {hits:?}"
        ))),
    }
}

fn permutation_matches(d: &LabelledDiagram, fd: &LabelledDiagram, perm: &[usize]) -> bool {
    for (i, node) in d.nodes.iter().enumerate() {
        if node.style != fd.nodes[perm[i]].style {
            return false;
        }
    }
    let n = d.nodes.len();
    for i in 0..n {
        for j in i + 1..n {
            if d.mu_between(i, j) != fd.mu_between(perm[i], perm[j]) {
                return false;
            }
            let arrow_a = d
                .edge_between(i, j)
                .and_then(|e| e.arrow)
                .map(|(x, y)| (perm[x], perm[y]));
            let arrow_b = fd.edge_between(perm[i], perm[j]).and_then(|e| e.arrow);
            if arrow_a != arrow_b {
                return false;
            }
        }
    }
    true
}

/// Check every bundled root-vector assignment: [t, v_alpha] must equal
/// alpha(t) v_alpha for each Cartan basis element, and every bundled
/// simple system must generate the full positive half of the root system.
pub fn verify_root_datum(g: &SuperAlgebra, sys: &RootSystem) -> Result<(), Error> {
    for (tname, eval) in &sys.cartan {
        let t = g.basis_element(tname);
        for r in &sys.roots {
            let idx = g.index_of(&r.vector_name).unwrap();
            let v = g.basis_element(&r.vector_name);
            let br = g.bracket(&t, &v)?;
            let expect: Rational = r
                .weight
                .coords
                .iter()
                .zip(eval)
                .map(|(c, e)| c * e)
                .sum();
            let ok = br.coords.iter().enumerate().all(|(k, c)| {
                if k == idx {
                    *c == Scalar::Rat(expect.clone())
                } else {
                    c.is_zero()
                }
            });
            if !ok {
                return Err(Error::NotEigenvector(format!(
                    "[{tname}, {}] != alpha(t) v",
                    r.vector_name
                )));
            }
        }
    }
    for fig in simple_systems(sys.algebra) {
        for w in &fig.roots {
            if !sys.is_root(w) {
                return Err(Error::Construction {
                    algebra: sys.algebra.name().into(),
                    detail: format!("{} contains non-root {w}", fig.name),
                });
            }
        }
        let mut plus: Vec<WeightVector> = fig.roots.clone();
        loop {
            let mut added = false;
            for a in 0..plus.len() {
                for b in a..plus.len() {
                    let s = plus[a].add(&plus[b]);
                    if sys.is_root(&s) && !plus.contains(&s) {
                        plus.push(s);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        if plus.len() != sys.roots.len() / 2 {
            return Err(Error::Construction {
                algebra: sys.algebra.name().into(),
                detail: format!(
                    "{} generates {} positive roots, expected {}",
                    fig.name,
                    plus.len(),
                    sys.roots.len() / 2
                ),
            });
        }
        for w in &plus {
            if plus.contains(&w.neg()) {
                return Err(Error::Construction {
                    algebra: sys.algebra.name().into(),
                    detail: format!("{} positive half contains both signs of {w}", fig.name),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_d21, build_f4, build_g3};

    #[test]
    fn gram_values() {
        let a = Scalar::alpha();
        let d = d21_roots(&a);
        // (beta1, beta1) = 1/2
        let b1 = WeightVector::from_ints(&[1, 0, 0]);
        assert_eq!(d.norm(&b1), Scalar::from_rat(1, 2));
        let g = g3_roots();
        // (delta + eps3, delta + eps3) = 0: delta+eps3 = (1,-1,-1)
        assert!(g.norm(&WeightVector::from_ints(&[1, -1, -1])).is_zero());
        let f = f4_roots();
        assert_eq!(
            f.norm(&WeightVector::from_ints(&[1, 0, 0, 0])),
            Scalar::from_int(-6)
        );
    }

    #[test]
    fn isotropy_classification() {
        let a = Scalar::alpha();
        let d = d21_roots(&a);
        for r in &d.roots {
            if r.parity == Parity::Odd {
                assert!(d.norm(&r.weight).is_zero(), "odd D(2,1;a) roots isotropic");
            }
        }
        let g = g3_roots();
        for r in &g.roots {
            if r.parity == Parity::Odd {
                let iso = d21_is_delta(&r.weight);
                assert_eq!(
                    g.norm(&r.weight).is_zero(),
                    !iso,
                    "only +-delta is non-isotropic among odd G(3) roots"
                );
            }
        }
        let f = f4_roots();
        for r in &f.roots {
            if r.parity == Parity::Odd {
                assert!(f.norm(&r.weight).is_zero(), "odd F(4) roots isotropic");
            }
        }
    }

    fn d21_is_delta(w: &WeightVector) -> bool {
        let one = int(1);
        (w.coords[0] == one || w.coords[0] == -&one)
            && w.coords[1] == int(0)
            && w.coords[2] == int(0)
    }

    #[test]
    fn root_data_verify_against_algebras() {
        let a = Scalar::alpha();
        let d21 = build_d21(&a).unwrap();
        verify_root_datum(&d21, &d21_roots(&a)).unwrap();
        let g3 = build_g3().unwrap();
        verify_root_datum(&g3, &g3_roots()).unwrap();
        let f4 = build_f4().unwrap();
        verify_root_datum(&f4, &f4_roots()).unwrap();
    }

    #[test]
    fn mu_spot_checks() {
        // D(2,1;a) Pi1: mu12 = 1 and mu23 = a symbolically
        let a = Scalar::alpha();
        let d21 = build_d21(&a).unwrap();
        let sys = d21_roots(&a);
        let pi1 = &figures(AlgebraId::D21)[0].roots;
        let m = sys.min_nonzero_norm();
        assert_eq!(m, Scalar::from_int(2));
        assert_eq!(mu(&sys, &pi1[0], &pi1[1], &m).unwrap(), Scalar::one());
        assert_eq!(mu(&sys, &pi1[1], &pi1[2], &m).unwrap(), Scalar::alpha());
        let _ = d21;

        // G(3) E+x2 Pi2: (mu12, mu23) = (1, 3)
        let gsys = g3_roots();
        let gm = gsys.min_nonzero_norm();
        assert_eq!(gm, Scalar::from_int(2));
        let pi2 = &per_orbit_systems(AlgebraId::G3)[1].1.roots;
        assert_eq!(mu(&gsys, &pi2[0], &pi2[1], &gm).unwrap(), Scalar::one());
        assert_eq!(
            mu(&gsys, &pi2[1], &pi2[2], &gm).unwrap(),
            Scalar::from_int(3)
        );

        // F(4) e(7) Pi1: (mu12, mu13, mu23, mu34) = (3, 2, 1, 2)
        let fsys = f4_roots();
        let fm = fsys.min_nonzero_norm();
        assert_eq!(fm, Scalar::from_int(2));
        let pi1 = &per_orbit_systems(AlgebraId::F4)[0].1.roots;
        let vals = [
            (0usize, 1usize, 3i64),
            (0, 2, 2),
            (1, 2, 1),
            (2, 3, 2),
        ];
        for (i, j, expect) in vals {
            assert_eq!(
                mu(&fsys, &pi1[i], &pi1[j], &fm).unwrap(),
                Scalar::from_int(expect),
                "mu({},{})",
                i + 1,
                j + 1
            );
        }
        // orthogonal non-isotropic pair
        assert_eq!(
            mu(
                &fsys,
                &WeightVector::from_ints(&[0, 1, -1, 0]),
                &WeightVector::from_ints(&[0, 0, 0, 1]),
                &fm
            )
            .unwrap(),
            Scalar::zero()
        );
    }

    #[test]
    fn d21_labels_for_regular_case() {
        // e = E1+E2+E3, h = H1+H2+H3: figure 4.4 labels (1,1,1)
        let a = Scalar::alpha();
        let g = build_d21(&a).unwrap();
        let sys = d21_roots(&a);
        let h = g.combo(&[
            (Scalar::one(), "H1"),
            (Scalar::one(), "H2"),
            (Scalar::one(), "H3"),
        ]);
        let d = label_diagram(&g, &sys, &figures(AlgebraId::D21)[3].roots, &h).unwrap();
        assert_eq!(d.integer_labels().unwrap(), vec![1, 1, 1]);
        // and the adapted enumeration finds exactly this diagram
        let found = adapted_diagrams(&g, &sys, &h).unwrap();
        assert_eq!(found.len(), 1);
        let (fig, labels) = match_figure(&sys, &g, &found[0].1).unwrap();
        assert_eq!(fig, "fig4.4");
        assert_eq!(labels, vec![1, 1, 1]);
    }

    #[test]
    fn zero_h_gives_all_figures_zero_labels() {
        let g3 = build_g3().unwrap();
        let sys = g3_roots();
        let found = adapted_diagrams(&g3, &sys, &g3.zero()).unwrap();
        assert_eq!(found.len(), 4);
        for (_, d) in &found {
            assert!(d.integer_labels().unwrap().iter().all(|&l| l == 0));
        }
    }
}
