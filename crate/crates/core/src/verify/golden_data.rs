//! Explicit commutation identities in U⁺, grouped as they are usually
//! derived: the B3 subsystem first, then successively longer root vectors.

/// Six groups of identities; every side of each chain must agree.
pub const GOLDEN_GROUPS: [&[&str]; 6] = [
    &[
        "[E_1, E_{12}] = [E_{12}, E_2] = [E_2, E_{23}] = [E_{233}, E_3] = [E_3, E_{34}] = [E_{34}, E_4] = 0",
        "[E_{1233}, E_{23}] = [E_{123}, E_2] = [E_1, E_{123}] = [E_1, E_{1233}] = 0",
        "[E_{123}, E_{23}] = E_2E_{1233} - s^2E_{1233}E_2",
        "[E_{12}, E_{123}] = [E_{23}, E_{233}] = [E_{123}, E_{1233}] = [E_{1233}, E_{12332}] = 0",
        "[E_2, E_{233}] = r(r-s)E_{23}^2",
        "[E_{12}, E_{23}] = (r^2-s^2)E_{123}E_2",
        "[E_{12}, E_{233}] = r^2s^2E_{12332} + r(r-s)(E_{123}E_{23} + s^2E_{23}E_{123})",
    ],
    &[
        "[E_{1234}, E_4] = [E_{1234}, E_2] = [E_1, E_{1234}] = [E_{12}, E_{1234}] = [E_1, E_{12343}] = 0",
        "[E_{23}, E_{34}] = rE_{234}E_3 - s^2E_3E_{234}",
        "[E_{233}, E_4] = (r+s)E_{2343}",
        "[E_{1233}, E_4] = (r+s)E_{12343}",
        "[E_{1234}, E_{233}] = [E_{1233}, E_{234}] = (r+s)E_{23}E_{12343} - s(r+s)E_{12343}E_{23}",
        "[E_2, E_{2343}] = r^2E_{234}E_{23} - sE_{23}E_{234} = r(r-s)E_{234}E_{23}",
        "[E_{234}, E_4] = [E_2, E_{234}] = [E_{23}, E_{234}] = 0",
        "[E_{12332}, E_3] = 0",
        "[E_{123}, E_{34}] = rE_{1234}E_3 - s^2E_3E_{1234}",
        "[E_{1234}, E_{23}] = E_2E_{12343} - s^2E_{12343}E_2",
        "[E_{12332}, E_4] = (r+s)E_{123432}",
        "[E_{12332}, E_{34}] = r^2s^2(r+s)[E_3, E_{123432}]",
        "[E_{123}, E_{2343}] = r^2sE_{12343}E_{23} - s^2E_{23}E_{12343} + (r-s)(E_{1233}E_{234} + s^2E_{233}E_{1234})",
        "[E_{1234}, E_{234}] = [E_2, E_{123434}]",
        "[E_{1234}, E_{2343}] = rE_{12343}E_{234} - s^2E_{234}E_{12343}",
    ],
    &[
        "[E_{233}, E_{234}] = 0",
        "[E_{23}, E_{2343}] = (r-s)E_{233}E_{234}",
        "[E_{234}, E_{2343}] = 0",
        "[E_{2343}, E_3] = 0",
        "[E_{23434}, E_3] = 0",
        "[E_{23434}, E_4] = 0",
        "[E_{234}, E_{23434}] = 0",
        "[E_{2343}, E_{23434}] = 0",
        "[E_{233}, E_{2343}] = 0",
        "[E_{233}, E_{23434}] = r(r^2-s^2)E_{2343}^2",
        "[E_{1233}, E_{23434}] = r(r^2-s^2)(E_{12343}E_{2343} + s^2E_{2343}E_{12343}) + r^2s^2E_{123434233}",
    ],
    &[
        "[E_{123}, E_{234}] = rE_{1234}E_{23} - s^2E_{23}E_{1234}",
        "[E_{123}, E_{1234}] = 0",
        "[E_{1233}, E_{1234}] = 0",
        "[E_{12332}, E_{1234}] = 0",
        "[E_{1234}, E_{12343}] = 0",
        "[E_{12343}, E_{233}] = 0",
        "[E_{1234}, E_{123432}] = 0",
        "[E_{1234}, E_{1234323}] = rE_{123432}E_{12343} - rs^2E_{12343}E_{123432}",
        "[E_{12343123432}, E_3] = [E_{12343}, E_{1234323}] = 0",
        "[E_{1234}, E_{12343123432}] = 0",
        "[E_{12343}, E_{12343123432}] = 0",
        "[E_{12332}, E_{12343}] = 0",
        "[E_{1233}, E_{12343}] = 0",
        "[E_{1234323}, E_3] = 0",
        "[E_{12}, E_{2343}] = rs^2(r-s)E_{234}E_{123} + r(r-s)E_{1234}E_{23} + r^2s^2E_{123432}",
        "[E_{12343}, E_{2343}] = (r+s)^{-1}(E_{233}E_{123434} - s^2E_{123434}E_{233})",
        "[E_{1233}, E_{123434}] = r(r^2-s^2)E_{12343}^2",
        "[E_{1233}, E_{1234342}] = r(r^2-s^2)(r^{-2}E_{123432}E_{12343} + E_{12343}E_{123432}) + r^2s^2E_{123434}E_{12332} - r^{-2}E_{12332}E_{123434}",
        "[E_{12332}, E_{123434}] = -rs(r+s)[E_{123432}, E_{12343}]",
    ],
    &[
        "[E_{123432}, E_2] = 0",
        "[E_{12343123432}, E_2] = r^{-1}s^{-2}(r-s)E_{123432}^2",
        "[E_{12343123432}, E_{123432}] = 0",
        "[E_{1234323}, E_2] = 0",
        "[E_{123432}, E_{1234323}] = 0",
        "[E_{12343}, E_{234}] = (r+s)^{-1}(E_{23}E_{123434} - s^2E_{123434}E_{23})",
        "[E_{1234323}, E_4] = rs(r+s)^{-1}E_{12343423}",
        "[E_{123432}, E_{34}] = s^2(r+s)^{-1}(r^2E_3E_{1234342} - E_{1234342}E_3)",
        "[E_{1234}, E_{123434}] = 0",
        "[E_{123432}, E_{123434}] = 0",
        "[E_{1234323}, E_{123434}] = 0",
        "[E_{12343}, E_{123434}] = 0",
        "[E_{1234342}, E_4] = 0",
        "[E_{12343}, E_{1234342}] = (s^{-2} - r^{-2})E_{123432}E_{123434}",
        "[E_{123434}, E_{1234342}] = 0",
        "[E_{1234323}, E_{34}] = r^2sE_3E_{12343423} - sE_{12343423}E_3",
        "[E_{123432}, E_{234}] = (r+s)^{-1}(r^2E_{23}E_{1234342} - s^2E_{1234342}E_{23})",
    ],
    &[
        "[E_{123434}, E_{12343423}] = 0",
        "[E_{1234342}, E_2] = 0",
        "[E_{1234342}, E_{23}] = r^{-2}E_2E_{12343423} - r^2E_{12343423}E_2",
        "[E_{12343423}, E_2] = 0",
        "[E_{1234342}, E_{12343423}] = 0",
        "[E_{123434233}, E_3] = 0",
        "[E_{1234342}, E_{123434233}] = r(r-s)E_{12343423}^2",
        "[E_{12343423}, E_{123434233}] = 0",
        "[E_{12343423}, E_{23}] = r^{-2}s^{-2}E_2E_{123434233} - s^2E_{123434233}E_2",
        "[E_{12343423}, E_{233}] = r^{-1}s^{-2}(r+s)(E_{23}E_{123434233} - rs^3E_{123434233}E_{23})",
        "[E_{123434233}, E_{23}] = 0",
        "[E_{1234342332}, E_3] = 0",
        "[E_{12343423}, E_{1234342332}] = 0",
        "[E_{123434233}, E_{1234342332}] = 0",
        "[E_{1234342332}, E_2] = 0",
        "[E_{1234342}, E_{233}] = E_{23}E_{12343423} - rsE_{12343423}E_{23}",
        "[E_{1234323}, E_{234}] = r(r+s)^{-1}(E_{23}E_{12343423} - s^2E_{12343423}E_{23})",
        "[E_{123432}, E_{2343}] = r^2(r-s)E_{233}E_{1234342} + (r-s)E_{23}E_{12343423} + r^2sE_{234}E_{1234323} - sE_{1234323}E_{234}",
    ],
];
