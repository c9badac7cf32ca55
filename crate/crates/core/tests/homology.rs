use strcat_core::homology::{
    ext1_dim, hom_dim, indecomposable_projective, isomorphic, omega_power, projective_cover,
    stable_hom_dim, syzygy,
};
use strcat_core::strings::string_module;
use strcat_core::{Family, FamilyAlgebra, Fp, StringName, StringWord};

fn fam(family: Family, m: usize) -> FamilyAlgebra {
    FamilyAlgebra::new(family, m, Fp::default()).unwrap()
}

#[test]
fn uniserial_hom_dimensions() {
    for m in 1..=6 {
        let fa = fam(Family::Ae1, m);
        for j in 0..m {
            for k in 0..m {
                let d = hom_dim(&fa.module(StringName::new('V', j)).unwrap(), &fa.module(StringName::new('V', k)).unwrap()).unwrap();
                assert_eq!(d, j.min(k) + 1, "m={m} V{j} V{k}");
            }
        }
    }
}

#[test]
fn ae1_syzygy_of_simple() {
    for m in 1..=6 {
        let fa = fam(Family::Ae1, m);
        let v0 = fa.module(StringName::new('V', 0)).unwrap();
        assert!(isomorphic(&syzygy(&v0), &fa.module(StringName::new('V', m - 1)).unwrap()));
        assert!(isomorphic(&omega_power(&v0, 2), &v0));
    }
}

#[test]
fn simple_self_extensions() {
    let fa = fam(Family::Ae3, 3);
    let s0 = string_module(&fa.algebra, &StringWord::empty(0)).unwrap();
    let s1 = string_module(&fa.algebra, &StringWord::empty(1)).unwrap();
    assert_eq!(ext1_dim(&s0, &s0).unwrap(), 1);
    assert_eq!(ext1_dim(&s1, &s1).unwrap(), 0);
    assert_eq!(ext1_dim(&s0, &s1).unwrap(), 1);
    assert_eq!(ext1_dim(&s1, &s0).unwrap(), 1);

    let fa = fam(Family::Ae2, 2);
    let s0 = string_module(&fa.algebra, &StringWord::empty(0)).unwrap();
    assert_eq!(ext1_dim(&s0, &s0).unwrap(), 0);
}

#[test]
fn projectives_are_stably_zero() {
    for (family, m) in [(Family::Ae1, 3), (Family::Ae2, 2), (Family::Ae3, 3)] {
        let fa = fam(family, m);
        for v in 0..fa.algebra.quiver().vertex_count() {
            let p = indecomposable_projective(&fa.algebra, v);
            assert_eq!(stable_hom_dim(&p, &p).unwrap(), 0);
            assert!(syzygy(&p).is_zero());
        }
    }
}

#[test]
fn projective_cover_dimensions() {
    let fa = fam(Family::Ae3, 3);
    for name in fa.names() {
        let m = fa.module(name).unwrap();
        let (p, pi) = projective_cover(&m).unwrap();
        assert!(pi.is_surjective());
        assert_eq!(p.total_dim(), m.total_dim() + syzygy(&m).total_dim());
    }
}
