//! Truncated power-sum coordinates and generating series over them.

mod pseries;
mod zseries;

pub use pseries::PSeries;
pub use zseries::{invert_pseries, zbar_power_coeff, ZSeries};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BetaScalar;
    use crate::error::Error;
    use crate::partitions::Partition;

    fn p(k: u32, d: u32) -> PSeries {
        PSeries::power_sum(k, d)
    }

    fn scalars(xs: &[i64]) -> Vec<BetaScalar> {
        xs.iter().map(|&x| BetaScalar::from_int(x)).collect()
    }

    #[test]
    fn products_and_truncation() {
        let d = 4;
        assert_eq!(
            &p(1, d) * &p(1, d),
            PSeries::monomial(Partition::from_parts(vec![1, 1]), BetaScalar::one(), d)
        );
        let s = &p(1, d) + &p(2, d);
        assert_eq!(&s * &PSeries::one(d), s);
        assert!((&p(3, d) * &p(2, d)).is_zero());
    }

    #[test]
    fn mismatched_degrees_are_usage_errors() {
        assert!(matches!(p(1, 3).checked_mul(&p(1, 4)), Err(Error::Mismatch { .. })));
        let a = ZSeries::one(2, 3);
        let b = ZSeries::one(3, 3);
        assert!(matches!(a.checked_mul(&b), Err(Error::Mismatch { .. })));
    }

    #[test]
    fn cauchy_products() {
        let a = ZSeries::from_scalars(&scalars(&[1, 1]), 2, 0);
        let b = ZSeries::from_scalars(&scalars(&[1, -1]), 2, 0);
        assert_eq!(&a * &b, ZSeries::from_scalars(&scalars(&[1, 0, -1]), 2, 0));
        // geometric series times (1 - z) is 1
        let geo = ZSeries::from_scalars(&scalars(&[1; 6]), 5, 0);
        let one_minus = ZSeries::from_scalars(&scalars(&[1, -1]), 5, 0);
        assert!((&geo * &one_minus).is_one());
    }

    #[test]
    fn inversion() {
        let a = ZSeries::from_scalars(&scalars(&[1, 1]), 3, 0);
        assert_eq!(a.invert().unwrap(), ZSeries::from_scalars(&scalars(&[1, -1, 1, -1]), 3, 0));
        assert!(ZSeries::one(3, 2).invert().unwrap().is_one());
        assert!(ZSeries::zero(3, 2).invert().is_err());
    }

    #[test]
    fn exp_of_z() {
        let z = ZSeries::from_scalars(&scalars(&[0, 1]), 3, 0);
        let expected = ZSeries::from_scalars(
            &[
                BetaScalar::one(),
                BetaScalar::one(),
                BetaScalar::ratio(1, 2),
                BetaScalar::ratio(1, 6),
            ],
            3,
            0,
        );
        assert_eq!(z.exp().unwrap(), expected);
        assert!(ZSeries::zero(3, 0).exp().unwrap().is_one());
        assert!(ZSeries::one(3, 0).exp().is_err());
        assert!(ZSeries::zero(3, 0).log().is_err());
    }

    #[test]
    fn zbar_substitution() {
        let z = ZSeries::from_scalars(&scalars(&[0, 1]), 3, 0);
        let expected = ZSeries::from_scalars(
            &[
                BetaScalar::zero(),
                BetaScalar::from_int(-1),
                BetaScalar::beta(),
                -BetaScalar::monomial(1, 2),
            ],
            3,
            0,
        );
        assert_eq!(z.substitute_zbar(), expected);
        assert!(ZSeries::one(3, 0).substitute_zbar().is_one());
        assert_eq!(z.substitute_zbar().substitute_zbar(), z);
    }

    #[test]
    fn beta_graded_homogeneity() {
        let d = 4;
        assert!(!(&p(1, d) + &p(2, d)).is_homogeneous_beta_graded(1));
        assert!(!(&p(1, d) + &p(2, d)).is_homogeneous_beta_graded(2));
        assert!(PSeries::zero(d).is_homogeneous_beta_graded(7));
        let s = &p(1, d) + &p(2, d).scale(&BetaScalar::monomial(3, 1));
        assert!(s.is_homogeneous_beta_graded(1));
    }

    #[test]
    fn pseries_json_shape() {
        let s = &p(2, 3) + &p(1, 3).scale(&"b / 2".parse().unwrap());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"degree":3,"terms":[{"partition":[1],"coeff":"b / 2"},{"partition":[2],"coeff":"1"}]}"#
        );
        let back: PSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
