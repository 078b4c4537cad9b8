//! Built-in instances.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{build_algebra, build_group_action, images_to_matrix, Algebra, GroupAction, Presentation};
use crate::mat::SVec;
use crate::scalars::{make_field, root_of_unity, Scalar};
use crate::Error;

/// Cyclic quiver on n vertices, arrows `a_i: i -> i+1`, paths of length n
/// killed; the generator rotates the vertices.
pub fn cyclic_example(n: usize) -> Result<(Algebra, GroupAction), Error> {
    if n < 2 {
        return Err(Error::Invalid("cyclic example needs n >= 2".into()));
    }
    let f = make_field(n as u32)?;
    let mut p = Presentation::new(&f, n);
    for i in 0..n {
        p.arrow(&format!("a{}", i + 1), i, (i + 1) % n);
    }
    p.truncate = Some(n);
    let a = build_algebra(&p)?;
    let idem: Vec<(usize, SVec)> = (0..n).map(|i| (i, a.unit_vec(a.idem[(i + 1) % n]))).collect();
    let arr: Vec<(usize, SVec)> = (0..n).map(|i| (i, a.arrow_vecs[(i + 1) % n].clone())).collect();
    let g = images_to_matrix(&a, &idem, &arr);
    let act = build_group_action(&a, &[(n as u32, g)])?;
    Ok((a, act))
}

/// `k[x]/(x²)` with `Z/d` acting by `x -> ζ_d x`.
pub fn dual_numbers(d: u32) -> Result<(Algebra, GroupAction), Error> {
    let f = make_field(d)?;
    let mut p = Presentation::new(&f, 1);
    p.arrow("x", 0, 0);
    let xx = p.word(&["x", "x"])?;
    p.relations.push(vec![(Scalar::one(&f), xx)]);
    let a = build_algebra(&p)?;
    let z = root_of_unity(&f, d, 1)?;
    let g = images_to_matrix(&a, &[], &[(0, crate::mat::svec_scale(&a.arrow_vecs[0], &z))]);
    let act = build_group_action(&a, &[(d, g)])?;
    Ok((a, act))
}

/// `k[x,y]/(x², y², xy, yx)` with `Z/2 x Z/2` changing the sign of one variable each.
pub fn klein_example() -> Result<(Algebra, GroupAction), Error> {
    let f = make_field(2)?;
    let mut p = Presentation::new(&f, 1);
    p.arrow("x", 0, 0);
    p.arrow("y", 0, 0);
    for w in [["x", "x"], ["y", "y"], ["x", "y"], ["y", "x"]] {
        let path = p.word(&w)?;
        p.relations.push(vec![(Scalar::one(&f), path)]);
    }
    let a = build_algebra(&p)?;
    let m1 = Scalar::int(&f, -1);
    let gx = images_to_matrix(&a, &[], &[(0, crate::mat::svec_scale(&a.arrow_vecs[0], &m1))]);
    let gy = images_to_matrix(&a, &[], &[(1, crate::mat::svec_scale(&a.arrow_vecs[1], &m1))]);
    let act = build_group_action(&a, &[(2, gx), (2, gy)])?;
    Ok((a, act))
}

/// The two-vertex algebra with `a: 1 -> 2`, `b: 2 -> 1`, `ab = ba = 0`, and
/// `φ: e1 <-> e2, a -> -b, b -> a` of order 4, over `Q(ζ_m)` with `4 | m`.
pub fn section7_example(m: u32) -> Result<(Algebra, GroupAction), Error> {
    if !m.is_multiple_of(4) {
        return Err(Error::NeedsLargerConductor);
    }
    let f = make_field(m)?;
    let mut p = Presentation::new(&f, 2);
    p.arrow("a", 0, 1);
    p.arrow("b", 1, 0);
    for w in [["a", "b"], ["b", "a"]] {
        let path = p.word(&w)?;
        p.relations.push(vec![(Scalar::one(&f), path)]);
    }
    let a = build_algebra(&p)?;
    let g = section7_phi(&a);
    let act = build_group_action(&a, &[(4, g)])?;
    Ok((a, act))
}

pub(crate) fn section7_phi(a: &Algebra) -> crate::mat::Mat {
    let f = &a.field;
    let idem = vec![(0, a.unit_vec(a.idem[1])), (1, a.unit_vec(a.idem[0]))];
    let arr = vec![(0, crate::mat::svec_scale(&a.arrow_vecs[1], &Scalar::int(f, -1))), (1, a.arrow_vecs[0].clone())];
    images_to_matrix(a, &idem, &arr)
}

/// Path algebra of `1 -> 2`, which is not self-injective; trivial group.
pub fn hereditary_a2() -> Result<(Algebra, GroupAction), Error> {
    let f = make_field(1)?;
    let mut p = Presentation::new(&f, 2);
    p.arrow("a", 0, 1);
    let a = build_algebra(&p)?;
    let act = GroupAction::trivial(&a);
    Ok((a, act))
}
