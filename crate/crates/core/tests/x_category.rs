mod common;

use std::sync::OnceLock;

use common::{instance, random_combination};
use gsym_core::bimod::Bimodule;
use gsym_core::twocat::*;
use gsym_core::xcat::{Setting, XMorphism, XTensor};
use gsym_core::Scalar;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Fixture {
    s: Setting,
    bases: Vec<Bimodule>,
    homs: Vec<Vec<Vec<XMorphism>>>,
    tens: Vec<Vec<XTensor>>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        [instance(cyclic_example(2)), instance(dual_numbers(2)), instance(section7_example(4))]
            .into_iter()
            .map(|inst| {
                let bases = catalogue(&inst).unwrap().bases;
                let s = inst.s;
                let homs = bases.iter().map(|x| bases.iter().map(|y| s.x_hom_list(x, y)).collect()).collect();
                let tens = bases.iter().map(|x| bases.iter().map(|y| s.x_tensor(x, y)).collect()).collect();
                Fixture { s, bases, homs, tens }
            })
            .collect()
    })
}

impl Fixture {
    fn pick(&self, a: usize, b: usize, rng: &mut StdRng) -> XMorphism {
        random_combination(&self.s, &self.homs[a][b], self.bases[a].dim, self.bases[b].dim, rng)
    }

    fn id(&self, a: usize) -> XMorphism {
        XMorphism::identity(self.s.g(), self.bases[a].dim, self.s.field())
    }
}

fn objects(rng: &mut StdRng, n: usize) -> [usize; 4] {
    std::array::from_fn(|_| rng.gen_range(0..n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative_and_unital(k in 0usize..3, seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let [a, b, c, d] = objects(&mut rng, fx.bases.len());
        let f = fx.pick(a, b, &mut rng);
        let g = fx.pick(b, c, &mut rng);
        let h = fx.pick(c, d, &mut rng);
        let s = &fx.s;
        let left = s.compose(&h, &s.compose(&g, &f).unwrap()).unwrap();
        let right = s.compose(&s.compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(s.compose(&fx.id(b), &f).unwrap(), f.clone());
        prop_assert_eq!(s.compose(&f, &fx.id(a)).unwrap(), f);
    }

    #[test]
    fn tensor_respects_composition(k in 0usize..3, seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let n = fx.bases.len();
        let [a1, a2, a3, b1] = objects(&mut rng, n);
        let [b2, b3, _, _] = objects(&mut rng, n);
        let (f, f2) = (fx.pick(a1, a2, &mut rng), fx.pick(a2, a3, &mut rng));
        let (g, g2) = (fx.pick(b1, b2, &mut rng), fx.pick(b2, b3, &mut rng));
        let s = &fx.s;
        let (t1, t2, t3) = (&fx.tens[a1][b1], &fx.tens[a2][b2], &fx.tens[a3][b3]);
        let lhs = s.compose(&s.x_tensor_mor(t2, t3, &f2, &g2), &s.x_tensor_mor(t1, t2, &f, &g)).unwrap();
        let rhs = s.x_tensor_mor(t1, t3, &s.compose(&f2, &f).unwrap(), &s.compose(&g2, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
        let ids = s.x_tensor_mor(t1, t1, &fx.id(a1), &fx.id(b1));
        prop_assert_eq!(ids, XMorphism::identity(s.g(), t1.dim(), s.field()));
    }

    #[test]
    fn composites_of_x_morphisms_intertwine(k in 0usize..3, seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let [a, b, c, _] = objects(&mut rng, fx.bases.len());
        let gf = fx.s.compose(&fx.pick(b, c, &mut rng), &fx.pick(a, b, &mut rng)).unwrap();
        prop_assert!(fx.s.is_x_morphism(&fx.bases[a], &fx.bases[c], &gf));
    }
}

#[test]
fn hom_bases_consist_of_x_morphisms() {
    for fx in fixtures() {
        for (a, x) in fx.bases.iter().enumerate() {
            for (b, y) in fx.bases.iter().enumerate() {
                for h in &fx.homs[a][b] {
                    assert!(fx.s.is_x_morphism(x, y, h));
                }
            }
        }
    }
}

#[test]
fn associator_is_natural_and_invertible() {
    let mut rng = StdRng::seed_from_u64(7);
    for fx in fixtures() {
        let s = &fx.s;
        let n = fx.bases.len();
        for _ in 0..4 {
            let [x, y, z, _] = objects(&mut rng, n);
            let [x2, y2, z2, _] = objects(&mut rng, n);
            let build = |x: usize, y: usize, z: usize| {
                let xy = s.x_tensor(&fx.bases[x], &fx.bases[y]);
                let xy_z = s.x_tensor(&xy.bm, &fx.bases[z]);
                let yz = s.x_tensor(&fx.bases[y], &fx.bases[z]);
                let x_yz = s.x_tensor(&fx.bases[x], &yz.bm);
                (xy, xy_z, yz, x_yz)
            };
            let (xy, xy_z, yz, x_yz) = build(x, y, z);
            let fwd = s.associator(&xy, &xy_z, &yz, &x_yz);
            let inv = s.associator_inv(&xy, &xy_z, &yz, &x_yz);
            assert_eq!(s.compose(&inv, &fwd).unwrap(), XMorphism::identity(s.g(), xy_z.dim(), s.field()));
            assert_eq!(s.compose(&fwd, &inv).unwrap(), XMorphism::identity(s.g(), x_yz.dim(), s.field()));
            assert!(s.is_x_morphism(&xy_z.bm, &x_yz.bm, &fwd));

            let (xy2, xy_z2, yz2, x_yz2) = build(x2, y2, z2);
            let fwd2 = s.associator(&xy2, &xy_z2, &yz2, &x_yz2);
            let (f, g, h) = (fx.pick(x, x2, &mut rng), fx.pick(y, y2, &mut rng), fx.pick(z, z2, &mut rng));
            let left = s.x_tensor_mor(&xy_z, &xy_z2, &s.x_tensor_mor(&xy, &xy2, &f, &g), &h);
            let right = s.x_tensor_mor(&x_yz, &x_yz2, &f, &s.x_tensor_mor(&yz, &yz2, &g, &h));
            assert_eq!(s.compose(&fwd2, &left).unwrap(), s.compose(&right, &fwd).unwrap());
        }
    }
}

#[test]
fn flip_is_an_invertible_x_morphism() {
    for fx in fixtures() {
        let s = &fx.s;
        for x in &fx.bases {
            for y in &fx.bases {
                let src = s.x_tensor(x, y);
                let tgt = s.flip_target(x, y);
                let fl = s.flip(&src, &tgt);
                let back = s.flip_inv(&src, &tgt);
                assert!(s.is_x_morphism(&src.bm, &tgt.bm, &fl));
                assert!(s.is_x_morphism(&tgt.bm, &src.bm, &back));
                assert_eq!(s.compose(&back, &fl).unwrap(), XMorphism::identity(s.g(), src.dim(), s.field()));
                assert_eq!(s.compose(&fl, &back).unwrap(), XMorphism::identity(s.g(), tgt.dim(), s.field()));
            }
        }
    }
}

#[test]
fn block_trace_of_identity_counts_group_copies() {
    for fx in fixtures() {
        let s = &fx.s;
        for m in &fx.bases {
            let id = XMorphism::identity(s.g(), m.dim, s.field());
            assert_eq!(s.block_trace(&id), Scalar::int(s.field(), (s.g() * m.dim) as i64));
        }
    }
}
