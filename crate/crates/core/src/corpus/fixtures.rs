use std::collections::BTreeMap;

use super::{Claim, Fixture, GenericClass, Motion, SphereClass};
use crate::framework::Framework;
use crate::graph::Graph;

const S: f64 = 0.866_025_403_784_438_6; // sqrt(3) / 2

type P = [f64; 2];

fn add(a: P, b: P) -> P {
    [a[0] + b[0], a[1] + b[1]]
}

fn sub(a: P, b: P) -> P {
    [a[0] - b[0], a[1] - b[1]]
}

fn scale(k: f64, a: P) -> P {
    [k * a[0], k * a[1]]
}

/// `p` rotated about `c` by +60 degrees (`ccw`) or -60 degrees.
fn rot60(p: P, c: P, ccw: bool) -> P {
    let s = if ccw { S } else { -S };
    let v = sub(p, c);
    add(c, [0.5 * v[0] - s * v[1], s * v[0] + 0.5 * v[1]])
}

fn midpoint(a: P, b: P) -> P {
    scale(0.5, add(a, b))
}

/// Named points and edges, turned into a graph and realization at the end.
struct Sketch {
    d: usize,
    points: BTreeMap<String, Vec<f64>>,
    edges: Vec<(String, String)>,
}

impl Sketch {
    fn new(d: usize) -> Sketch {
        Sketch { d, points: BTreeMap::new(), edges: Vec::new() }
    }

    fn at(&mut self, name: impl Into<String>, p: P) -> P {
        self.points.insert(name.into(), p.to_vec());
        p
    }

    fn at3(&mut self, name: &str, p: [f64; 3]) {
        self.points.insert(name.into(), p.to_vec());
    }

    fn p(&self, name: &str) -> P {
        let v = &self.points[name];
        [v[0], v[1]]
    }

    fn edge(&mut self, a: impl Into<String>, b: impl Into<String>) {
        self.edges.push((a.into(), b.into()));
    }

    fn edges(&mut self, pairs: &[(&str, &str)]) {
        for &(a, b) in pairs {
            self.edge(a, b);
        }
    }

    /// Adds every pair at unit distance as an edge.
    fn unit_edges(&mut self) {
        let names: Vec<String> = self.points.keys().cloned().collect();
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                let dist: f64 =
                    self.points[a].iter().zip(&self.points[b]).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
                if (dist - 1.0).abs() < 1e-9 {
                    self.edge(a.clone(), b.clone());
                }
            }
        }
    }

    fn graph(&self) -> Graph {
        Graph::new(self.points.keys(), self.edges.iter().map(|(a, b)| (a, b))).expect("fixture graph is well formed")
    }

    fn realize(&self, g: &Graph) -> Framework {
        Framework::from_labelled(g.clone(), self.d, &self.points).expect("fixture realization is well formed")
    }

    fn finish(self, id: impl Into<String>) -> Fixture {
        let graph = self.graph();
        let realization = Some(self.realize(&graph));
        Fixture::new(id, self.d, graph, realization)
    }
}

fn unit_triangle_strip(s: &mut Sketch, base: &str, apex: &str, len: usize, y: f64, up: bool) {
    for x in 1..=len {
        s.at(format!("{base}{x}"), [x as f64, y]);
    }
    for x in 1..len {
        let (b, nb) = (format!("{base}{x}"), format!("{base}{}", x + 1));
        let c = rot60(s.p(&nb), s.p(&b), up);
        s.at(format!("{apex}{x}"), c);
        s.edge(b.clone(), nb.clone());
        s.edge(b, format!("{apex}{x}"));
        s.edge(nb, format!("{apex}{x}"));
        if x > 1 {
            s.edge(format!("{apex}{}", x - 1), format!("{apex}{x}"));
        }
    }
}

fn penny_yes() -> Sketch {
    let mut s = Sketch::new(2);
    let a = s.at("a", [0.0, 0.0]);
    let b = s.at("b", [1.0, 0.0]);
    let d = s.at("d", rot60(b, a, true));
    s.at("c", add(d, [1.0, 0.0]));
    s.edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "d")]);
    s
}

fn fig_penny_yes() -> Fixture {
    penny_yes()
        .finish("fig-penny-yes")
        .note("two unit triangles sharing an edge, a valid penny packing")
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::RigidNotGlobal),
        ])
}

fn fig_penny_no() -> Fixture {
    let mut s = Sketch::new(2);
    let t = 50f64.to_radians();
    s.at("a", [0.0, 0.0]);
    s.at("b", [1.0, 0.0]);
    s.at("d", [t.cos(), t.sin()]);
    s.edges(&[("a", "b"), ("a", "d")]);
    s.finish("fig-penny-no").note("unit edges at a 50 degree wedge; the free ends overlap").claims([Claim::Valid(false)])
}

fn rhombus(id: &str, angle_deg: f64) -> Fixture {
    let mut s = Sketch::new(2);
    let t = angle_deg.to_radians();
    let d = if angle_deg == 90.0 { [0.0, 1.0] } else { [t.cos(), t.sin()] };
    s.at("a", [0.0, 0.0]);
    s.at("b", [1.0, 0.0]);
    s.at("d", d);
    s.at("c", add(d, [1.0, 0.0]));
    s.edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
    s.finish(id)
        .note("four-cycle of pennies; opposite sides stay parallel while it shears")
        .motion(Motion::Shear { moving: vec!["c".into(), "d".into()], bar: ("a".into(), "d".into()) })
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::Flexible),
            Claim::Generic(GenericClass::Flexible),
        ])
}

fn fig_rigid_rhombus() -> Fixture {
    penny_yes()
        .finish("fig-rigid-rhombus")
        .note("rhombus braced by its short diagonal")
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::RigidNotGlobal),
            Claim::BpClasses(1),
        ])
}

/// Hexagonal patch of the triangular lattice with `k` rings around a centre.
pub fn penny_grid(k: usize) -> Fixture {
    let mut s = Sketch::new(2);
    let k = k as i64;
    for q in -k..=k {
        for r in -k..=k {
            if (q + r).abs() <= k {
                let p = add([q as f64, 0.0], scale(r as f64, [0.5, S]));
                s.at(format!("g{}_{}", q + k, r + k), p);
            }
        }
    }
    s.unit_edges();
    s.finish(format!("penny-grid-{k}"))
        .note("hexagonal patch of the triangular lattice; every touching pair is an edge")
        .claims([
            Claim::Valid(true),
            Claim::Chordal(false),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::GloballyRigid),
        ])
}

fn fig_rigid_not_global() -> Fixture {
    let mut s = Sketch::new(2);
    unit_triangle_strip(&mut s, "b", "c", 5, 0.0, true);
    let pts: [(&str, P); 15] = [
        ("d1", [1.5, -S]),
        ("e1", [0.5, -S]),
        ("f1", [1.0, -2.0 * S]),
        ("g1", [0.0, -2.0 * S]),
        ("h1", [0.5, -3.0 * S]),
        ("i1", [1.5, -3.0 * S]),
        ("d2", [4.5, -S]),
        ("e2", [5.5, -S]),
        ("f2", [5.0, -2.0 * S]),
        ("g2", [6.0, -2.0 * S]),
        ("h2", [5.5, -3.0 * S]),
        ("i2", [4.5, -3.0 * S]),
        ("l1", [2.5, -3.0 * S]),
        ("l2", [3.5, -3.0 * S]),
        ("m", [3.0, -2.0 * S]),
    ];
    for (name, p) in pts {
        s.at(name, p);
    }
    s.edges(&[("b1", "d1"), ("b2", "d1"), ("b4", "d2"), ("b5", "d2")]);
    for side in ["1", "2"] {
        let v = |x: &str| format!("{x}{side}");
        for (a, b) in [("e", "b"), ("e", "d"), ("f", "d"), ("f", "e"), ("g", "e"), ("g", "f"), ("h", "g"), ("h", "f"), ("i", "f"), ("i", "h")]
        {
            let b = if b == "b" { if side == "1" { "b1".to_owned() } else { "b5".to_owned() } } else { v(b) };
            s.edge(v(a), b);
        }
    }
    s.edges(&[("i1", "l1"), ("l1", "l2"), ("l2", "i2"), ("l1", "m"), ("l2", "m")]);
    let graph = s.graph();
    let base = s.realize(&graph);
    s.at("m", [3.0, -4.0 * S]);
    let flipped = s.realize(&graph);
    Fixture::new("fig-rigid-not-global", 2, graph, Some(base))
        .note("taut chain under a triangle strip; the degree-two penny can flip across its neighbours")
        .alternate(flipped)
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::RigidNotGlobal),
            Claim::Generic(GenericClass::Flexible),
            Claim::MaxwellDeficit(-1),
        ])
}

/// Triangle strip with two hanging arms joined by a taut straight chain;
/// `k` lengthens both the strip and the chain.
pub fn fig_sparse(k: usize) -> Fixture {
    let mut s = Sketch::new(2);
    let len = 5 + k;
    unit_triangle_strip(&mut s, "b", "c", len, 0.0, true);
    let b1 = s.p("b1");
    let d1 = s.at("d1", rot60(s.p("b2"), b1, false));
    let e1 = s.at("e1", rot60(d1, b1, false));
    s.at("f1", add(e1, [0.5, -S]));
    s.at("g1", add(d1, [0.5, -S]));
    let last = s.p(&format!("b{len}"));
    s.at("d2", add(last, [-0.5, -S]));
    s.at("e2", add(last, [0.5, -S]));
    s.at("f2", add(last, [0.0, -2.0 * S]));
    s.at("g2", add(last, [-1.0, -2.0 * S]));
    let (prev, lastb) = (format!("b{}", len - 1), format!("b{len}"));
    s.edges(&[("d1", "b1"), ("d1", "b2"), ("e1", "b1"), ("e1", "d1"), ("f1", "d1"), ("f1", "e1"), ("g1", "d1"), ("g1", "f1")]);
    s.edge("d2", prev);
    s.edge("d2", lastb.clone());
    s.edge("e2", lastb);
    s.edges(&[("e2", "d2"), ("f2", "d2"), ("f2", "e2"), ("g2", "d2"), ("g2", "f2")]);
    let mut prev = "g1".to_owned();
    for j in 1..=k + 1 {
        let name = format!("l{j}");
        s.at(name.clone(), [2.0 + j as f64, -2.0 * S]);
        s.edge(prev, name.clone());
        prev = name;
    }
    s.edge(prev, "g2");
    s.finish(format!("fig-sparse-{k}"))
        .note("rigid strip and arms held apart by a taut chain; fewer edges than generic rigidity needs")
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::Flexible),
            Claim::MaxwellDeficit(-(k as i64)),
        ])
}

fn barjoint_ladder(id: &str, width: usize, generic: GenericClass) -> Fixture {
    let mut s = Sketch::new(2);
    unit_triangle_strip(&mut s, "b", "c", width, 0.5, true);
    unit_triangle_strip(&mut s, "bp", "cp", width, -0.5, false);
    for x in 1..=width {
        s.edge(format!("b{x}"), format!("bp{x}"));
    }
    let mut moving: Vec<String> = (1..=width).map(|x| format!("b{x}")).collect();
    moving.extend((1..width).map(|x| format!("c{x}")));
    s.finish(id)
        .note("two triangle strips joined by parallel vertical bars")
        .motion(Motion::Shear { moving, bar: ("bp1".into(), "b1".into()) })
        .claims([Claim::Valid(true), Claim::Sphere(SphereClass::Flexible), Claim::Generic(generic)])
}

fn wheel() -> Sketch {
    let mut s = Sketch::new(2);
    s.at("a0", [0.0, 0.0]);
    let rim: [P; 6] = [[0.5, S], [-0.5, S], [-1.0, 0.0], [-0.5, -S], [0.5, -S], [1.0, 0.0]];
    for (i, p) in rim.iter().enumerate() {
        s.at(format!("a{}", i + 1), *p);
    }
    for i in 1..=6 {
        s.edge("a0", format!("a{i}"));
        s.edge(format!("a{i}"), format!("a{}", i % 6 + 1));
    }
    s
}

fn fig_barjoint_c() -> Fixture {
    wheel()
        .finish("fig-barjoint-c")
        .note("hexagonal wheel: one penny surrounded by six")
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::GloballyRigid),
        ])
}

fn fig_barjoint_d() -> Fixture {
    let mut s = Sketch::new(2);
    let (h, r) = ([1.0, 0.0], [0.5, S]);
    for i in 1..=3 {
        for j in 1..=i {
            s.at(format!("a{i}{j}"), add(scale(i as f64, r), scale((j + 1) as f64 - i as f64, h)));
        }
    }
    for i in 2..=3 {
        for j in 2..=i {
            let (li, lj) = (i - 1, j - 1);
            s.edge(format!("a{i}{j}"), format!("a{i}{lj}"));
            s.edge(format!("a{i}{j}"), format!("a{li}{lj}"));
            s.edge(format!("a{i}{lj}"), format!("a{li}{lj}"));
        }
    }
    s.finish("fig-barjoint-d").note("triangular patch of six pennies").claims([
        Claim::Valid(true),
        Claim::Sphere(SphereClass::GloballyRigid),
        Claim::Generic(GenericClass::RigidNotGlobal),
        Claim::DTree(true),
    ])
}

/// A realization of the two-flap graph; `flip_b` mirrors the flap hanging
/// off `a2`.
fn two_realizations_sketch(flip_b: bool) -> Sketch {
    let mut s = Sketch::new(2);
    let (h, r) = ([1.0, 0.0], [0.5, S]);
    s.at("a1", [0.0, 0.0]);
    let a2 = s.at("a2", h);
    s.edge("a1", "a2");
    let mut o = 1;
    for (c, i) in [(1.0, 3), (2.0, 5), (3.0, 7)] {
        s.at(format!("a{i}"), scale(c, r));
        s.at(format!("a{}", i + 1), sub(scale(c, r), h));
        s.edge(format!("a{o}"), format!("a{i}"));
        s.edge(format!("a{o}"), format!("a{}", i + 1));
        s.edge(format!("a{i}"), format!("a{}", i + 1));
        o = i;
    }
    s.edges(&[("a2", "a3"), ("a4", "a6"), ("a6", "a8")]);
    let (a5, a7) = (s.p("a5"), s.p("a7"));
    let mut o = 7;
    for (c, i) in [(1.0, 9), (2.0, 11), (3.0, 13)] {
        s.at(format!("a{i}"), add(a7, scale(c, h)));
        s.at(format!("a{}", i + 1), add(a5, scale(c, h)));
        s.edge(format!("a{o}"), format!("a{i}"));
        s.edge(format!("a{o}"), format!("a{}", i + 1));
        s.edge(format!("a{i}"), format!("a{}", i + 1));
        o = i;
    }
    let a16 = s.at("a16", add(s.p("a14"), h));
    s.edges(&[("a5", "a10"), ("a10", "a12"), ("a12", "a14"), ("a14", "a16"), ("a13", "a16")]);
    let a17 = s.at("a17", sub(a16, r));
    s.edges(&[("a14", "a17"), ("a16", "a17")]);

    // lower intersection of the radius-2 circles about a2 and a17
    let mid = midpoint(a2, a17);
    let half = sub(a17, a2);
    let len = (half[0] * half[0] + half[1] * half[1]).sqrt();
    let off = (4.0 - len * len / 4.0).sqrt();
    let normal = [half[1] / len, -half[0] / len];
    let m = s.at("m", add(mid, scale(off, normal)));

    let b1 = s.at("b1", midpoint(a2, m));
    let b2 = s.at("b2", rot60(b1, a2, flip_b));
    s.at("b3", rot60(m, b1, flip_b));
    let _ = b2;
    s.edges(&[("a2", "b1"), ("b1", "m"), ("a2", "b2"), ("b2", "b1"), ("b2", "b3"), ("b3", "m"), ("b3", "b1")]);
    let c1 = s.at("c1", midpoint(a17, m));
    s.at("c2", rot60(c1, a17, true));
    s.at("c3", rot60(m, c1, true));
    s.edges(&[("a17", "c1"), ("c1", "m"), ("a17", "c2"), ("c2", "c1"), ("c2", "c3"), ("c3", "m"), ("c3", "c1")]);
    s
}

fn fig_two_realizations() -> Fixture {
    let graph = two_realizations_sketch(false).graph();
    let flipped = two_realizations_sketch(true).realize(&graph);
    two_realizations_sketch(false)
        .finish("fig-two-realizations")
        .note("triangle strips closed by two flaps through a distance-two join; one flap can be mirrored")
        .alternate(flipped)
        .claims([
            Claim::Valid(true),
            Claim::BpClasses(2),
            Claim::Sphere(SphereClass::RigidNotGlobal),
            Claim::Generic(GenericClass::RigidNotGlobal),
        ])
}

fn path(n: usize) -> Fixture {
    let mut s = Sketch::new(2);
    for i in 0..n {
        s.at(format!("v{i}"), [i as f64, 0.0]);
        if i > 0 {
            s.edge(format!("v{}", i - 1), format!("v{i}"));
        }
    }
    let split = n / 2;
    let v1: Vec<String> = (split..n).map(|i| format!("v{i}")).collect();
    let v2: Vec<String> = (0..=split).map(|i| format!("v{i}")).collect();
    s.finish(format!("path-{n}"))
        .note("straight chain of pennies")
        .motion(Motion::Rotate { v1, v2 })
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::Flexible),
            Claim::Generic(GenericClass::Flexible),
            Claim::Classify("NotSphereRigid"),
        ])
}

fn fan(n: usize) -> Fixture {
    let mut s = Sketch::new(2);
    let o = s.at("o", [0.0, 0.0]);
    let mut p = s.at("r1", [1.0, 0.0]);
    s.edge("o", "r1");
    for i in 2..n {
        p = s.at(format!("r{i}"), rot60(p, o, true));
        s.edge("o", format!("r{i}"));
        s.edge(format!("r{}", i - 1), format!("r{i}"));
    }
    s.finish(format!("fan-{n}")).note("fan of unit triangles around one penny").claims([
        Claim::Valid(true),
        Claim::Sphere(SphereClass::GloballyRigid),
        Claim::Generic(GenericClass::RigidNotGlobal),
        Claim::Classify("GloballySphereRigid"),
        Claim::BpClasses(1),
    ])
}

fn k3() -> Fixture {
    let mut s = Sketch::new(2);
    s.at("a", [0.0, 0.0]);
    s.at("b", [1.0, 0.0]);
    s.at("c", [0.5, S]);
    s.edges(&[("a", "b"), ("b", "c"), ("a", "c")]);
    s.finish("K3").note("three mutually touching pennies").claims([
        Claim::Valid(true),
        Claim::Sphere(SphereClass::GloballyRigid),
        Claim::Generic(GenericClass::GloballyRigid),
        Claim::BpClasses(1),
    ])
}

fn k4_plane() -> Fixture {
    Fixture::new("K4", 2, Graph::complete(4), None).note("four mutually touching pennies cannot exist").claims([
        Claim::Sphere(SphereClass::NoRealization),
        Claim::BpClasses(0),
        Claim::Generic(GenericClass::GloballyRigid),
        Claim::Classify("NotApplicable"),
    ])
}

fn triple_triangle() -> Fixture {
    let g = Graph::new(
        ["a", "b", "x", "y", "z"],
        [("a", "b"), ("a", "x"), ("b", "x"), ("a", "y"), ("b", "y"), ("a", "z"), ("b", "z")],
    )
    .expect("fixture graph is well formed");
    Fixture::new("triple-triangle-shared-edge", 2, g, None)
        .note("three triangles on one edge: two apex positions for three pennies")
        .claims([Claim::BpClasses(0), Claim::Sphere(SphereClass::NoRealization), Claim::DTree(true)])
}

const TET_H: f64 = 0.816_496_580_927_726; // sqrt(2/3)

fn tetrahedron() -> Sketch {
    let mut s = Sketch::new(3);
    s.at3("t0", [0.0, 0.0, 0.0]);
    s.at3("t1", [1.0, 0.0, 0.0]);
    s.at3("t2", [0.5, S, 0.0]);
    s.at3("t3", [0.5, S / 3.0, TET_H]);
    s.edges(&[("t0", "t1"), ("t0", "t2"), ("t0", "t3"), ("t1", "t2"), ("t1", "t3"), ("t2", "t3")]);
    s
}

fn k4_tetrahedron() -> Fixture {
    tetrahedron()
        .finish("K4-tetrahedron")
        .note("four mutually touching marbles")
        .analogue()
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::GloballyRigid),
            Claim::BpClasses(1),
        ])
}

fn three_tree_5() -> Fixture {
    let mut s = tetrahedron();
    s.at3("t4", [0.5, S / 3.0, -TET_H]);
    s.edges(&[("t0", "t4"), ("t1", "t4"), ("t2", "t4")]);
    s.finish("3-tree-5")
        .note("two tetrahedra glued on a face; the mirror position of the apex is taken")
        .analogue()
        .claims([
            Claim::Valid(true),
            Claim::Sphere(SphereClass::GloballyRigid),
            Claim::Generic(GenericClass::RigidNotGlobal),
            Claim::BpClasses(1),
            Claim::DTree(true),
        ])
}

fn octahedron() -> Fixture {
    let mut s = Sketch::new(3);
    let a = std::f64::consts::FRAC_1_SQRT_2;
    let axes = [("x0", [a, 0.0, 0.0]), ("x1", [-a, 0.0, 0.0]), ("y0", [0.0, a, 0.0]), ("y1", [0.0, -a, 0.0]), ("z0", [0.0, 0.0, a]), ("z1", [0.0, 0.0, -a])];
    for (name, p) in axes {
        s.at3(name, p);
    }
    for (i, (u, _)) in axes.iter().enumerate() {
        for (v, _) in &axes[i + 1..] {
            if u[..1] != v[..1] {
                s.edge(*u, *v);
            }
        }
    }
    s.finish("octahedron").note("unit octahedron: planar, 3|V| - 6 edges, not redundantly rigid").claims([
        Claim::Valid(true),
        Claim::Generic(GenericClass::RigidNotGlobal),
        Claim::Hendrickson(false),
        Claim::Chordal(false),
    ])
}

fn path_4_3d() -> Fixture {
    let mut s = Sketch::new(3);
    for i in 0..4 {
        s.at3(&format!("v{i}"), [i as f64, 0.0, 0.0]);
        if i > 0 {
            s.edge(format!("v{}", i - 1), format!("v{i}"));
        }
    }
    s.finish("path-4-3d").note("straight chain of four marbles").analogue().claims([
        Claim::Valid(true),
        Claim::Sphere(SphereClass::Flexible),
        Claim::Generic(GenericClass::Flexible),
        Claim::Classify("NotSphereRigid"),
    ])
}

pub(super) fn all() -> Vec<Fixture> {
    let mut out = vec![
        fig_penny_yes(),
        fig_penny_no(),
        rhombus("fig-flex-square", 90.0),
        rhombus("fig-flex-rhombus", 80.0),
        fig_rigid_rhombus(),
        fig_rigid_not_global(),
        barjoint_ladder("fig-barjoint-a", 3, GenericClass::RigidNotGlobal),
        barjoint_ladder("fig-barjoint-b", 4, GenericClass::GloballyRigid),
        fig_barjoint_c(),
        fig_barjoint_d(),
        fig_two_realizations(),
        path(3),
        path(4),
        fan(5),
        k3(),
        k4_plane(),
        triple_triangle(),
        k4_tetrahedron(),
        three_tree_5(),
        octahedron(),
        path_4_3d(),
    ];
    out.extend((1..=3).map(penny_grid));
    out.extend((1..=3).map(fig_sparse));
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}
