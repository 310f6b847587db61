/// (ell, s, h, weighted, zeta_re, zeta_im, value)
pub const LINE: &[(usize, f64, f64, bool, f64, f64, (f64, f64))] = &[
    (0, 100.0, 1.0, false, -1.0, 0.0, (1.9990012015452253333e-2, 0.0)),
    (0, 100.0, 1.0, true, -1.0, 0.0, (1.9999092001404750303, 0.0)),
    (0, 1000.0, 1.0, false, -1.0, 0.0, (1.999999999998795093e-3, 0.0)),
    (0, 1000.0, 1.0, true, -1.0, 0.0, (1.9999999999999630655, 0.0)),
    (0, 10000.0, 1.0, false, -1.0, 0.0, (2.0e-4, 0.0)),
    (0, 10000.0, 1.0, true, -1.0, 0.0, (2.0, 0.0)),
    (1, 100.0, 1.0, false, -1.0, 0.0, (1.1875967391888891386e-3, 0.0)),
    (1, 100.0, 1.0, true, -1.0, 0.0, (3.9889224171379536962e-2, 0.0)),
    (1, 1000.0, 1.0, false, -1.0, 0.0, (1.1999999998713994464e-5, 0.0)),
    (1, 1000.0, 1.0, true, -1.0, 0.0, (3.9999999999606556527e-3, 0.0)),
    (1, 10000.0, 1.0, false, -1.0, 0.0, (1.2e-7, 0.0)),
    (1, 10000.0, 1.0, true, -1.0, 0.0, (4.0e-4, 0.0)),
    (2, 100.0, 1.0, false, -1.0, 0.0, (2.2389936890903237225e-4, 0.0)),
    (2, 100.0, 1.0, true, -1.0, 0.0, (4.6595870972305868512e-3, 0.0)),
    (2, 1000.0, 1.0, false, -1.0, 0.0, (2.3999999862163472925e-7, 0.0)),
    (2, 1000.0, 1.0, true, -1.0, 0.0, (4.7999999957921444609e-5, 0.0)),
    (2, 10000.0, 1.0, false, -1.0, 0.0, (2.4e-10, 0.0)),
    (2, 10000.0, 1.0, true, -1.0, 0.0, (4.8e-7, 0.0)),
    (3, 100.0, 1.0, false, -1.0, 0.0, (7.8601758822548746823e-5, 0.0)),
    (3, 100.0, 1.0, true, -1.0, 0.0, (1.2525963539292245304e-3, 0.0)),
    (3, 1000.0, 1.0, false, -1.0, 0.0, (1.0079998515594432096e-8, 0.0)),
    (3, 1000.0, 1.0, true, -1.0, 0.0, (1.4399999547952751273e-6, 0.0)),
    (3, 10000.0, 1.0, false, -1.0, 0.0, (1.008e-12, 0.0)),
    (3, 10000.0, 1.0, true, -1.0, 0.0, (1.44e-9, 0.0)),
    (4, 100.0, 1.0, false, -1.0, 0.0, (3.9341293042490854129e-5, 0.0)),
    (4, 100.0, 1.0, true, -1.0, 0.0, (5.3801421105542027152e-4, 0.0)),
    (4, 1000.0, 1.0, false, -1.0, 0.0, (7.2575839273950608207e-10, 0.0)),
    (4, 1000.0, 1.0, true, -1.0, 0.0, (8.0639951190222208574e-8, 0.0)),
    (4, 10000.0, 1.0, false, -1.0, 0.0, (7.2576e-15, 0.0)),
    (4, 10000.0, 1.0, true, -1.0, 0.0, (8.064e-12, 0.0)),
    (5, 100.0, 1.0, false, -1.0, 0.0, (2.4207451846496301897e-5, 0.0)),
    (5, 100.0, 1.0, true, -1.0, 0.0, (3.0261307089993883822e-4, 0.0)),
    (5, 1000.0, 1.0, false, -1.0, 0.0, (7.9831848948986143799e-11, 0.0)),
    (5, 1000.0, 1.0, true, -1.0, 0.0, (7.2575469928618126269e-9, 0.0)),
    (5, 10000.0, 1.0, false, -1.0, 0.0, (7.98336e-17, 0.0)),
    (5, 10000.0, 1.0, true, -1.0, 0.0, (7.2576e-14, 0.0)),
    (6, 100.0, 1.0, false, -1.0, 0.0, (1.6879657189791199254e-5, 0.0)),
    (6, 100.0, 1.0, true, -1.0, 0.0, (1.996895626329859197e-4, 0.0)),
    (6, 1000.0, 1.0, false, -1.0, 0.0, (1.2452120314615816815e-11, 0.0)),
    (6, 1000.0, 1.0, true, -1.0, 0.0, (9.5794525285458553172e-10, 0.0)),
    (6, 10000.0, 1.0, false, -1.0, 0.0, (1.24540416e-18, 0.0)),
    (6, 10000.0, 1.0, true, -1.0, 0.0, (9.580032e-16, 0.0)),
    (0, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (9.9714907547035844486e-3, -1.7345191800242098168e-2)),
    (0, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (1.7317994223050761608, -1.0002387317340827884)),
    (0, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (1.0000000000664683756e-3, -1.7320508076186156092e-3)),
    (0, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (1.7320508075709462502, -1.0000000000014990961)),
    (0, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (1.0e-4, -1.7320508075688772935e-4)),
    (0, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (1.7320508075688772935, -1.0)),
    (1, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (-6.3738856443930441452e-4, -1.0647944392811790862e-3)),
    (1, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (-3.2544844969329374044e-4, -4.0252975953832767508e-2)),
    (1, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (-5.9999999315062252079e-6, -1.0392304900311641474e-5)),
    (1, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (2.1343449593339770375e-12, -4.0000000016517137933e-3)),
    (1, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (-6.0e-8, -1.0392304845413263761e-7)),
    (1, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (-4.805585704472696795e-38, -4.0e-4)),
    (2, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (-2.9015878425073671582e-4, -2.4006435284402268586e-5)),
    (2, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (-4.5889528979080200978e-3, -2.6525107421078117658e-3)),
    (2, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (-2.3999992962867056655e-7, -6.0804581041577894822e-14)),
    (2, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (-4.1569217185223743244e-5, -2.4000001826257236449e-5)),
    (2, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (-2.4e-10, 1.4325539171230257671e-40)),
    (2, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (-4.1569219381653055045e-7, -2.4e-7)),
    (3, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (-1.1839878026733570629e-4, 7.0951266049457265122e-5)),
    (3, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (-1.8311138394084160294e-3, 5.0700352180582496339e-4)),
    (3, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (-5.0399280121497540398e-9, 8.7294684989122467771e-9)),
    (3, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (-1.2470743292465095101e-6, 7.1999797384001264573e-7)),
    (3, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (-5.04e-13, 8.7295360701471415594e-13)),
    (3, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (-1.2470765814495916513e-9, 7.2e-10)),
    (4, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (-5.385772636583580865e-5, 6.8200495135903400427e-5)),
    (4, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (-7.8787101151213912857e-4, 7.26428177622541349e-4)),
    (4, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (3.6295318438074896133e-10, 6.2845127558308260888e-10)),
    (4, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (2.2974181883768026017e-12, 8.0637744805223181351e-8)),
    (4, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (3.6288e-15, 6.2852659705059419228e-15)),
    (4, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (-5.0206153854168388358e-38, 8.064e-12)),
    (5, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (-2.6868486488441700009e-5, 5.6027411466130911129e-5)),
    (5, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (-3.76804380350463369e-4, 6.2119051113008454079e-4)),
    (5, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (7.9907340392782914759e-11, -8.4180081607151227891e-14)),
    (5, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (6.2875921151686136199e-9, 3.6262826789251385656e-9)),
    (5, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (7.98336e-17, 1.6868147369666467078e-40)),
    (5, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (6.2852659705059419228e-14, 3.6288e-14)),
    (6, 100.0, 1.0, false, -0.86602540378443864676, -0.5, (-1.4222279597820872277e-5, 4.5590357951658071757e-5)),
    (6, 100.0, 1.0, true, -0.86602540378443864676, -0.5, (-1.9444629732710075559e-4, 5.0473312450329675514e-4)),
    (6, 1000.0, 1.0, false, -0.86602540378443864676, -0.5, (6.3003748519892842885e-12, -1.0879775895696067018e-11)),
    (6, 1000.0, 1.0, true, -0.86602540378443864676, -0.5, (8.3198531692970326959e-10, -4.818179635546338431e-10)),
    (6, 10000.0, 1.0, false, -0.86602540378443864676, -0.5, (6.2270208e-19, -1.0785516405388196339e-18)),
    (6, 10000.0, 1.0, true, -0.86602540378443864676, -0.5, (8.296551081067843338e-16, -4.790016e-16)),
];
/// (theta_m, theta_M, s, value) over the infinite sector
pub const SECTOR: &[(f64, f64, f64, (f64, f64))] = &[
    (0.0, 1.5707963267948966192, 10.0, (-5.2856399376034877522e-46, -1.2e-1)),
    (0.0, 1.0471975511965977462, 100.0, (5.1961524227066318806e-4, -9.0e-4)),
    (0.2, 2.5, 1000.0, (-8.0900557018307337634e-6, -3.82439285123795291e-6)),
];
/// Directional derivative of u0(s x) at r = 1, theta = 0 along phi = -pi/2, s = 4
pub const NORMAL_DERIVATIVE: (f64, f64) = (-2.7974237925532506972e-44, 1.3533528323661269189e-1);
