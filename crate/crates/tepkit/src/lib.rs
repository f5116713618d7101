pub mod probe {
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    pub fn svd_probe() -> (f64, f64, f64, Vec<f64>) {
        // random-ish complex 5x4 matrix, fixed entries
        let m = 5;
        let n = 4;
        let data: Vec<Complex64> = (0..m * n)
            .map(|k| {
                let x = ((k * 7919 + 13) % 101) as f64 / 17.0 - 2.5;
                let y = ((k * 104729 + 5) % 97) as f64 / 19.0 - 2.0;
                Complex64::new(x, y)
            })
            .collect();
        let a = DMatrix::from_row_slice(m, n, &data);
        let svd = nalgebra::linalg::SVD::new(a.clone(), true, true);
        let u = svd.u.clone().unwrap();
        let vt = svd.v_t.clone().unwrap();
        let k = m.min(n);
        let mut sig = DMatrix::<Complex64>::zeros(k, k);
        for i in 0..k {
            sig[(i, i)] = Complex64::new(svd.singular_values[i], 0.0);
        }
        let recon = &u * &sig * &vt;
        let resid = (&a - &recon).norm();
        let uortho = (u.adjoint() * &u - DMatrix::<Complex64>::identity(k, k)).norm();
        let vortho = (&vt * vt.adjoint() - DMatrix::<Complex64>::identity(k, k)).norm();
        let sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
        (resid, uortho, vortho, sv)
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn nalgebra_complex_svd_works() {
        let (resid, uo, vo, sv) = crate::probe::svd_probe();
        eprintln!("resid={resid:e} uortho={uo:e} vortho={vo:e} sv={sv:?}");
        assert!(resid < 1e-12);
        assert!(uo < 1e-13);
        assert!(vo < 1e-13);
        let mut sorted = sv.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        eprintln!("sorted_desc={}", sorted == sv);
    }
}
