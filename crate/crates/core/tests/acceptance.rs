mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use gsym_core::bimod::LeftModule;
use gsym_core::completion::{decompose, end_mod_rad_dim, stabilizer, CompletedObject, IndecLabel};
use gsym_core::group::{dual_group, dual_subgroup, find_character, AbelianGroup, Character};
use gsym_core::mat::{svec_axpy, svec_scale, SVec};
use gsym_core::twocat::*;
use gsym_core::xcat::XMorphism;
use gsym_core::{root_of_unity, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn sign_instances() -> Vec<(&'static str, Instance)> {
    vec![
        ("Z/2 on k[x]/(x^2)", instance(dual_numbers(2))),
        ("Z/4 on k[x]/(x^2)", instance(dual_numbers(4))),
        ("Z/2xZ/2 on k[x,y]/(x^2,y^2,xy,yx)", instance(klein_example())),
    ]
}

fn product_character(list: &[Character], a: &Character, b: &Character) -> Character {
    let vals = a.mul_values(&b.restrict(&a.domain()));
    list[find_character(list, &vals).expect("product character")].clone()
}

fn identity_twist_fusion() -> Check {
    for (name, inst) in sign_instances() {
        let s = &inst.s;
        let cat = catalogue(&inst).map_err(err)?;
        let objs = cat.objects();
        let ghat = dual_group(&s.act.group);
        for chi in &ghat {
            for zeta in &ghat {
                let x = pi_tilde_obj(&cat, chi);
                let y = pi_tilde_obj(&cat, zeta);
                let (_, xy) = tensor_objects(s, &x, &y);
                let got = decompose(s, &xy, &objs).map_err(err)?;
                let want = IndecLabel::IdTwist { block: 0, chi: product_character(&ghat, chi, zeta) };
                let k = cat.find(&want).ok_or("missing identity twist")?;
                ensure(got == vec![(k, 1)], || format!("{name}: {} * {} gave {got:?}", chi.label(), zeta.label()))?;
            }
        }
    }
    Ok(())
}

fn pi_tilde_obj(cat: &Catalogue, chi: &Character) -> CompletedObject {
    let k = cat.find(&IndecLabel::IdTwist { block: 0, chi: chi.clone() }).expect("identity twist in catalogue");
    cat.entries[k].obj.clone()
}

fn twisted_absorption() -> Check {
    for (name, inst) in sign_instances() {
        let s = &inst.s;
        let cat = catalogue(&inst).map_err(err)?;
        let objs = cat.objects();
        let ghat = dual_group(&s.act.group);
        let mut seen = 0;
        for e in &cat.entries {
            let IndecLabel::Proj { i, j, chi } = &e.label else { continue };
            for zeta in &ghat {
                let y = pi_tilde_obj(&cat, zeta);
                let (_, xy) = tensor_objects(s, &e.obj, &y);
                let got = decompose(s, &xy, &objs).map_err(err)?;
                let list = dual_subgroup(&s.act.group, &chi.domain());
                let want = IndecLabel::Proj { i: *i, j: *j, chi: product_character(&list, chi, zeta) };
                let k = cat.find(&want).ok_or("missing projective label")?;
                ensure(got == vec![(k, 1)], || format!("{name}: {} * {} gave {got:?}", e.label, zeta.label()))?;
                seen += 1;
            }
        }
        ensure(seen > 0, || format!("{name}: no projective labels"))?;
    }
    Ok(())
}

fn cell_count() -> Check {
    let mut list: Vec<(String, Instance)> =
        (2..=4).map(|n| (format!("cyclic {n}"), instance(cyclic_example(n)))).collect();
    list.push(("order-4 example".into(), instance(section7_example(4))));
    for (name, inst) in list {
        let cat = catalogue(&inst).map_err(err)?;
        let table = mult_table(&inst, &cat).map_err(err)?;
        let c = cells(&table);
        let blocks = inst.a().nblocks;
        let g = inst.s.g();
        ensure(c.two_sided.len() == blocks + 1, || format!("{name}: {} two-sided cells", c.two_sided.len()))?;
        let projs: Vec<usize> = (0..cat.len()).filter(|&k| !cat.is_identity(k)).collect();
        let mut found_j0 = false;
        for cell in &c.two_sided {
            if cell.iter().all(|&k| cat.is_identity(k)) {
                ensure(cell.len() == g, || format!("{name}: identity cell {cell:?} has size != {g}"))?;
                let b = cat.entries[cell[0]].src;
                ensure(cell.iter().all(|&k| cat.entries[k].src == b), || {
                    format!("{name}: identity cell mixes blocks")
                })?;
            } else {
                ensure(*cell == projs, || format!("{name}: projective cell {cell:?} != {projs:?}"))?;
                found_j0 = true;
            }
        }
        ensure(found_j0, || format!("{name}: no projective cell"))?;
    }
    Ok(())
}

fn adjunctions() -> Check {
    let list = vec![
        ("cyclic 2", instance(cyclic_example(2)), Some(2)),
        ("cyclic 3", instance(cyclic_example(3)), Some(3)),
        ("Z/2 on k[x]/(x^2)", instance(dual_numbers(2)), None),
    ];
    for (name, inst, cyc) in list {
        let cat = catalogue(&inst).map_err(err)?;
        let data = all_adjunctions(&inst, &cat).map_err(err)?;
        for d in &data {
            ensure(verify_zigzag(&inst, d).map_err(err)?, || {
                format!("{name}: zig-zag fails for {}", cat.entries[d.left].label)
            })?;
        }
        if let Some(n) = cyc {
            for i in 1..=n {
                let f = cat
                    .entries
                    .iter()
                    .position(|e| matches!(e.label, IndecLabel::Proj { i: 0, j, .. } if j == i - 1))
                    .ok_or("F_i missing")?;
                let g = data[f].right;
                let want = n - i;
                ensure(matches!(cat.entries[g].label, IndecLabel::Proj { i: 0, j, .. } if j == want), || {
                    format!("{name}: right adjoint of F_{i} is {}", cat.entries[g].label)
                })?;
            }
        }
    }
    Ok(())
}

fn fiatness() -> Check {
    let mut list: Vec<(String, Instance)> =
        (2..=4).map(|n| (format!("cyclic {n}"), instance(cyclic_example(n)))).collect();
    list.push(("Z/2 on k[x]/(x^2)".into(), instance(dual_numbers(2))));
    for (name, inst) in list {
        let cat = catalogue(&inst).map_err(err)?;
        let table = mult_table(&inst, &cat).map_err(err)?;
        let r = fiat_report(&inst, &cat, &table).map_err(err)?;
        ensure(r.weakly_fiat && r.fiat, || format!("{name}: {r:?}"))?;
    }
    let inst = instance(hereditary_a2());
    let cat = catalogue(&inst).map_err(err)?;
    let table = mult_table(&inst, &cat).map_err(err)?;
    let r = fiat_report(&inst, &cat, &table).map_err(err)?;
    ensure(!r.weakly_fiat && !r.fiat, || format!("A2 control: {r:?}"))
}

fn classification() -> Check {
    for n in 2..=12u32 {
        let (_, total) = classify_count(&AbelianGroup::new(vec![n]));
        ensure(total == divisor_count(n as u64), || format!("Z/{n}: total {total}"))?;
    }
    let (_, total) = classify_count(&AbelianGroup::new(vec![2, 2]));
    ensure(total == 6, || format!("Z/2xZ/2: total {total}"))?;
    let groups: Vec<Vec<u32>> =
        (2..=12).map(|n| vec![n]).chain([vec![2, 2], vec![2, 4], vec![2, 2, 2], vec![3, 3], vec![2, 6]]).collect();
    let mut compared = 0;
    for orders in groups {
        let g = AbelianGroup::new(orders.clone());
        let (rows, _) = classify_count(&g);
        for row in rows.iter().filter(|r| r.subgroup.len() <= 8) {
            let oracle = h2_by_cocycles(&g, &row.subgroup);
            ensure(oracle == row.schur_order, || {
                format!("{orders:?} subgroup {:?}: formula {} oracle {oracle}", row.invariant_factors, row.schur_order)
            })?;
            compared += 1;
        }
    }
    ensure(compared > 0, || "nothing compared".into())
}

fn hcell_combinatorics() -> Check {
    let got: Vec<(u64, u64, u64, u64)> = hcell_solve(10).iter().map(|s| (s.x, s.y, s.b, s.c)).collect();
    let want: Vec<(u64, u64, u64, u64)> = (1..=10).map(|n| (n, n, n, n)).collect();
    ensure(got == want, || format!("solutions {got:?}"))?;
    let zero = hcell_solve_case(10, Some(0));
    ensure(zero.is_empty(), || format!("y = 0 branch has {zero:?}"))
}

fn order4_example() -> Check {
    let (a, act) = section7_example(4).map_err(err)?;
    let f = a.field.clone();
    let phi = act.group.elem(&[1]);
    let one = Scalar::one(&f);
    let e1 = a.unit_vec(a.idem[0]);
    let e2 = a.unit_vec(a.idem[1]);
    let basis: Vec<SVec> = (0..a.dim).map(|k| a.unit_vec(k)).collect();
    let pow_phi = |k: i64, x: &SVec| act.apply(act.group.pow(phi, k), x);
    let order = (1..=8).find(|&k| basis.iter().all(|x| &pow_phi(k, x) == x)).unwrap_or(0);
    ensure(order == 4, || format!("order of phi is {order}"))?;
    let el = svec_axpy(&e1, &Scalar::int(&f, -1), &e2);
    for x in &basis {
        ensure(a.mul(&pow_phi(2, x), &el) == a.mul(&el, x), || "phi^2 is not conjugation by e1 - e2".into())?;
    }
    ensure(a.mul(&el, &el) == a.one(), || "e1 - e2 is not an involution".into())?;
    let t = a.mul(&act.apply(phi, &el), &el);
    let minus_one = svec_scale(&a.one(), &Scalar::int(&f, -1));
    ensure(t == minus_one, || "phi(a^-1) a != -e1 - e2".into())?;
    for x in &basis {
        ensure(a.mul(&t, x) == a.mul(x, &t), || "phi(a^-1) a is not central".into())?;
    }
    let i = root_of_unity(&f, 4, 1).map_err(err)?;
    let half = Scalar::frac(&f, 1, 2);
    let c0 = one.add(&i).mul(&half);
    let c1 = one.sub(&i).mul(&half);
    let b = svec_axpy(&svec_scale(&a.one(), &c0), &c1, &el);
    ensure(a.mul(&b, &b) == el, || "b^2 != a^-1".into())?;
    let b_inv = a.mul(&b, &el);
    ensure(a.mul(&b, &b_inv) == a.one(), || "b is not invertible".into())?;
    let sigma_phi = |x: &SVec| a.mul(&a.mul(&b, &act.apply(phi, x)), &b_inv);
    for x in &basis {
        let mut y = x.clone();
        for _ in 0..4 {
            y = sigma_phi(&y);
        }
        ensure(&y == x, || "(sigma phi)^4 != id".into())?;
    }
    let rep = section7_toolkit(&a, &act.mats[phi]).map_err(err)?;
    ensure(rep.order_phi == 4, || format!("toolkit order {}", rep.order_phi))?;
    ensure(rep.a == el, || "toolkit inner witness differs".into())?;
    ensure(rep.t == minus_one && rep.t_central, || "toolkit central element differs".into())?;
    ensure(rep.b == b, || "toolkit square root differs".into())?;
    ensure(rep.b_poly == vec![c0, c1], || "toolkit polynomial differs".into())?;
    ensure(rep.order_sigma_phi == 4, || format!("toolkit order of sigma phi {}", rep.order_sigma_phi))
}

fn hcell_realization() -> Check {
    let inst = instance(section7_example(4));
    let r = hcell_realization_check(&inst).map_err(err)?;
    ensure(r.realized && r.n == Some(1), || format!("{r:?}"))?;
    ensure(r.cartan == vec![vec![1, 1], vec![1, 1]], || format!("Cartan {:?}", r.cartan))?;
    let cat = catalogue(&inst).map_err(err)?;
    let table = mult_table(&inst, &cat).map_err(err)?;
    let star = fiat_report(&inst, &cat, &table).map_err(err)?.star.ok_or("no duality")?;
    let idx = |n: &Option<String>| cat.entries.iter().position(|e| Some(e.label.name()) == *n);
    let (fi, gi) = (idx(&r.f).ok_or("F not in catalogue")?, idx(&r.g).ok_or("G not in catalogue")?);
    ensure(star[fi] == gi && fi != gi, || {
        format!("F* = {}, G = {}", cat.entries[star[fi]].label, cat.entries[gi].label)
    })
}

fn structural_instances() -> Vec<(&'static str, Instance)> {
    vec![
        ("cyclic 2", instance(cyclic_example(2))),
        ("cyclic 3", instance(cyclic_example(3))),
        ("Z/2 on k[x]/(x^2)", instance(dual_numbers(2))),
        ("order-4 example", instance(section7_example(4))),
    ]
}

fn structural_invariants() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (name, inst) in structural_instances() {
        let s = &inst.s;
        let cat = catalogue(&inst).map_err(err)?;
        for m in &cat.bases {
            let d = end_mod_rad_dim(s, &CompletedObject::plain(s, m.clone())).map_err(err)?;
            let gm = stabilizer(s, m).len();
            ensure(d == gm, || format!("{name}: End/Rad dim {d} but |G_M| = {gm}"))?;
        }
        let projs: Vec<LeftModule> = (0..inst.a().nverts).map(|v| LeftModule::projective(inst.a(), v)).collect();
        for x in &cat.entries {
            for y in &cat.entries {
                let (_, xy) = tensor_objects(s, &x.obj, &y.obj);
                for p in &projs {
                    let lhs = s.act_left(&xy.m, &xy.e, p);
                    let rhs = s.act_left(&x.obj.m, &x.obj.e, &s.act_left(&y.obj.m, &y.obj.e, p));
                    ensure(lhs.dim == rhs.dim, || {
                        format!("{name}: {} * {} acting: {} vs {}", x.label, y.label, lhs.dim, rhs.dim)
                    })?;
                }
            }
        }
        interchange(name, &inst, &cat, &mut rng)?;
    }
    Ok(())
}

fn interchange(name: &str, inst: &Instance, cat: &Catalogue, rng: &mut StdRng) -> Check {
    let s = &inst.s;
    let b = &cat.bases;
    let n = b.len();
    let homs: Vec<Vec<Vec<XMorphism>>> = b.iter().map(|x| b.iter().map(|y| s.x_hom_list(x, y)).collect()).collect();
    let tens: Vec<Vec<_>> = b.iter().map(|x| b.iter().map(|y| s.x_tensor(x, y)).collect()).collect();
    let mut nonzero = 0;
    for _ in 0..100 {
        let [a1, a2, a3, b1, b2, b3]: [usize; 6] = std::array::from_fn(|_| rng.gen_range(0..n));
        let f = random_combination(s, &homs[a1][a2], b[a1].dim, b[a2].dim, rng);
        let f2 = random_combination(s, &homs[a2][a3], b[a2].dim, b[a3].dim, rng);
        let g = random_combination(s, &homs[b1][b2], b[b1].dim, b[b2].dim, rng);
        let g2 = random_combination(s, &homs[b2][b3], b[b2].dim, b[b3].dim, rng);
        let (t1, t2, t3) = (&tens[a1][b1], &tens[a2][b2], &tens[a3][b3]);
        let lhs = s.compose(&s.x_tensor_mor(t2, t3, &f2, &g2), &s.x_tensor_mor(t1, t2, &f, &g)).map_err(err)?;
        let ff = s.compose(&f2, &f).map_err(err)?;
        let gg = s.compose(&g2, &g).map_err(err)?;
        let rhs = s.x_tensor_mor(t1, t3, &ff, &gg);
        ensure(lhs == rhs, || format!("{name}: interchange fails on bases {a1},{a2},{a3} / {b1},{b2},{b3}"))?;
        if !lhs.is_zero() {
            nonzero += 1;
        }
    }
    ensure(nonzero > 0, || format!("{name}: every interchange sample was zero"))
}

type Named = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let checks: [Named; 10] = [
        ("identity-twist fusion", identity_twist_fusion),
        ("twisted absorption", twisted_absorption),
        ("cell count", cell_count),
        ("adjunctions", adjunctions),
        ("fiatness", fiatness),
        ("classification counts", classification),
        ("H-cell combinatorics", hcell_combinatorics),
        ("order-4 automorphism example", order4_example),
        ("H-cell realization", hcell_realization),
        ("structural invariants", structural_invariants),
    ];
    let mut failed = 0;
    for (k, (name, f)) in checks.iter().enumerate() {
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        match res {
            Ok(()) => println!("PASS {} {name}", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
