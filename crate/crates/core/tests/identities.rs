use num_bigint::BigInt;
use qpart_core::identities::{
    product_side_thm13, product_side_thm32, simplified_sum_r1, simplified_sum_r2, sum_side_r1,
    sum_side_r2, theta_form_r1, verify_cd_equality, verify_functional_equations, verify_jtp,
    verify_sum_sides, verify_thm13, verify_thm32, VerificationReport,
};
use qpart_core::partitions::{count_2crr, count_2crr_no_red1, count_d};
use qpart_core::qseries::Sign;

fn assert_all_pass(reports: &[VerificationReport]) {
    for r in reports {
        assert!(r.passed(), "{r}");
        assert!(!r.is_vacuous(), "{r}");
    }
}

#[test]
fn theorem_13_sides_agree() {
    let n = 100;
    let product = product_side_thm13(n);
    assert_eq!(product, sum_side_r1(n));
    assert_eq!(product, simplified_sum_r1(n));
    assert_eq!(product, theta_form_r1(n));
    for k in 0..=20 {
        assert_eq!(product.coeff(k).unwrap(), &count_2crr(k, 1));
    }
    assert_eq!(theta_form_r1(200), product_side_thm13(200));
    assert_all_pass(&verify_thm13(60));
}

#[test]
fn theorem_32_sides_agree() {
    let product = product_side_thm32(40);
    for n in 0..=20 {
        let want = count_2crr_no_red1(n);
        assert_eq!(product.coeff(n).unwrap(), &want);
        assert_eq!(count_d(2, 1, n).unwrap(), want);
    }
    assert_eq!(product.coeff(3).unwrap(), &BigInt::from(3));
    assert_all_pass(&verify_thm32(40));
}

#[test]
fn r2_sum_side() {
    assert_eq!(sum_side_r2(100), simplified_sum_r2(100));
    let s = sum_side_r2(30);
    for n in 0..=30 {
        assert_eq!(s.coeff(n).unwrap(), &count_2crr(n, 2), "n = {n}");
    }
    assert_all_pass(&verify_sum_sides(80));
}

#[test]
fn functional_equations_hold() {
    assert_all_pass(&verify_functional_equations(8, 30));
}

#[test]
fn jacobi_triple_product() {
    for sign in [Sign::Plus, Sign::Minus] {
        for shift in [0, 1] {
            let r = verify_jtp(sign, shift, 100).unwrap();
            assert!(r.passed() && !r.is_vacuous(), "{r}");
        }
    }
}

#[test]
fn gordon_overpartition_theorem() {
    for (k, i, n) in [(2, 2, 25), (2, 1, 25), (3, 2, 18)] {
        let r = verify_cd_equality(k, i, n).unwrap();
        assert!(r.passed() && !r.is_vacuous(), "{r}");
    }
}
