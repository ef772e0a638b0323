// Generated by tests/oracles/kernel_oracle.py (mpmath, 50 digits). Do not edit.
// Columns: gamma, u, h, mean_vv, mean_vg, mean_xv, mean_xg, var_x, var_v, cov_xv
#[allow(clippy::excessive_precision)]
pub const KERNEL_ORACLE: [[f64; 10]; 60] = [
    [0.1, 0.1, 1e-6, 9.999999000000049999998333e-1, -9.99999950000001666666625e-8, 9.99999950000001666666625e-7, -4.999999833333337499999917e-14, 6.666666166666689999999167e-21, 1.999999800000013333332667e-8, 9.999999000000058333330833e-15],
    [0.1, 0.1, 1e-4, 9.9999000004999983333375e-1, -9.999950000166666250000833e-6, 9.999950000166666250000833e-5, -4.999983333374999916666806e-10, 6.666616666899999166669127e-15, 1.999980000133332666669333e-6, 9.999900000583330833341944e-11],
    [0.1, 0.1, 1e-2, 9.990004998333749916680554e-1, -9.995001666250083319446428e-4, 9.995001666250083319446428e-3, -4.998333749916680553571677e-6, 6.661668999166912635926695e-9, 1.998001332666933244469835e-4, 9.990005830834194194507426e-7],
    [0.1, 0.1, 0.1, 9.90049833749168053573906e-1, -9.950166250831946426094023e-3, 9.950166250831946426094023e-2, -4.983374916805357390597718e-4, 6.616899169120748098044948e-6, 1.98013266932446977791859e-3, 9.900580841919507300214987e-5],
    [0.1, 0.1, 0.3, 9.704455335485081769325284e-1, -2.955446645149182306747165e-2, 2.955446645149182306747165e-1, -4.45533548508176932528352e-3, 1.760060978399819296062457e-4, 5.823546641575129046284722e-3, 8.734664872323556720960794e-4],
    [0.1, 0.1, 0.5, 9.512294245007140090914253e-1, -4.877057549928599090857468e-2, 4.877057549928599090857468e-1, -1.22942450071400909142532e-2, 8.027996689646320145221967e-4, 9.516258196404042683575094e-3, 2.37856903453155498139842e-3],
    [0.1, 1.0, 1e-6, 9.999999000000049999998333e-1, -9.99999950000001666666625e-7, 9.99999950000001666666625e-7, -4.999999833333337499999917e-13, 6.666666166666689999999167e-20, 1.999999800000013333332667e-7, 9.999999000000058333330833e-14],
    [0.1, 1.0, 1e-4, 9.9999000004999983333375e-1, -9.999950000166666250000833e-5, 9.999950000166666250000833e-5, -4.999983333374999916666806e-9, 6.666616666899999166669127e-14, 1.999980000133332666669333e-5, 9.999900000583330833341944e-10],
    [0.1, 1.0, 1e-2, 9.990004998333749916680554e-1, -9.995001666250083319446428e-3, 9.995001666250083319446428e-3, -4.998333749916680553571677e-5, 6.661668999166912635926695e-8, 1.998001332666933244469835e-3, 9.990005830834194194507426e-6],
    [0.1, 1.0, 0.1, 9.90049833749168053573906e-1, -9.950166250831946426094023e-2, 9.950166250831946426094023e-2, -4.983374916805357390597718e-3, 6.616899169120748098044948e-5, 1.98013266932446977791859e-2, 9.900580841919507300214987e-4],
    [0.1, 1.0, 0.3, 9.704455335485081769325284e-1, -2.955446645149182306747165e-1, 2.955446645149182306747165e-1, -4.45533548508176932528352e-2, 1.760060978399819296062457e-3, 5.823546641575129046284722e-2, 8.734664872323556720960794e-3],
    [0.1, 1.0, 0.5, 9.512294245007140090914253e-1, -4.877057549928599090857468e-1, 4.877057549928599090857468e-1, -1.22942450071400909142532e-1, 8.027996689646320145221967e-3, 9.516258196404042683575094e-2, 2.37856903453155498139842e-2],
    [1.0, 0.1, 1e-6, 9.999990000004999998333334e-1, -9.99999500000166666625e-8, 9.99999500000166666625e-7, -4.999998333333749999916667e-14, 6.666661666668999999166667e-20, 1.999998000001333332666667e-7, 9.999990000005833330833334e-14],
    [1.0, 0.1, 1e-4, 9.999000049998333374999167e-1, -9.999500016666250008333194e-6, 9.999500016666250008333194e-5, -4.999833337499916668055536e-10, 6.666166689999166691269216e-14, 1.999800013332666693332444e-5, 9.999000058330833419441945e-10],
    [1.0, 0.1, 1e-2, 9.90049833749168053573906e-1, -9.950166250831946426094023e-4, 9.950166250831946426094023e-3, -4.983374916805357390597718e-6, 6.616899169120748098044948e-8, 1.98013266932446977791859e-3, 9.900580841919507300214987e-6],
    [1.0, 0.1, 0.1, 9.048374180359595731642491e-1, -9.516258196404042683575094e-3, 9.516258196404042683575094e-2, -4.837418035959573164249059e-4, 6.189190658564339870607292e-5, 1.812692469220181413300645e-2, 9.05591700606271234143739e-4],
    [1.0, 0.1, 0.3, 7.408182206817178660668738e-1, -2.591817793182821339331262e-2, 2.591817793182821339331262e-1, -4.081822068171786606687378e-3, 1.44612466328450316390362e-3, 4.511883639059735673715411e-2, 6.717519473059070049471136e-3],
    [1.0, 0.1, 0.5, 6.065306597126334236037995e-1, -3.934693402873665763962005e-2, 3.934693402873665763962005e-1, -1.065306597126334236037995e-2, 5.824319767909137281967437e-3, 6.321205588285576784044762e-2, 1.548181217461754743879247e-2],
    [1.0, 1.0, 1e-6, 9.999990000004999998333334e-1, -9.99999500000166666625e-7, 9.99999500000166666625e-7, -4.999998333333749999916667e-13, 6.666661666668999999166667e-19, 1.999998000001333332666667e-6, 9.999990000005833330833334e-13],
    [1.0, 1.0, 1e-4, 9.999000049998333374999167e-1, -9.999500016666250008333194e-5, 9.999500016666250008333194e-5, -4.999833337499916668055536e-9, 6.666166689999166691269216e-13, 1.999800013332666693332444e-4, 9.999000058330833419441945e-9],
    [1.0, 1.0, 1e-2, 9.90049833749168053573906e-1, -9.950166250831946426094023e-3, 9.950166250831946426094023e-3, -4.983374916805357390597718e-5, 6.616899169120748098044948e-7, 1.98013266932446977791859e-2, 9.900580841919507300214987e-5],
    [1.0, 1.0, 0.1, 9.048374180359595731642491e-1, -9.516258196404042683575094e-2, 9.516258196404042683575094e-2, -4.837418035959573164249059e-3, 6.189190658564339870607292e-4, 1.812692469220181413300645e-1, 9.05591700606271234143739e-3],
    [1.0, 1.0, 0.3, 7.408182206817178660668738e-1, -2.591817793182821339331262e-1, 2.591817793182821339331262e-1, -4.081822068171786606687378e-2, 1.44612466328450316390362e-2, 4.511883639059735673715411e-1, 6.717519473059070049471136e-2],
    [1.0, 1.0, 0.5, 6.065306597126334236037995e-1, -3.934693402873665763962005e-1, 3.934693402873665763962005e-1, -1.065306597126334236037995e-1, 5.824319767909137281967437e-2, 6.321205588285576784044762e-1, 1.548181217461754743879247e-1],
    [2.0, 0.1, 1e-6, 9.999980000019999986666673e-1, -9.999990000006666663333335e-8, 9.999990000006666663333335e-7, -4.999996666668333332666667e-14, 1.333331333335199998666667e-19, 3.999992000010666656000009e-7, 1.999996000004666662666669e-13],
    [2.0, 0.1, 1e-4, 9.998000199986667333306668e-1, -9.999000066663333466662222e-6, 9.999000066663333466662222e-5, -4.999666683332666688888254e-10, 1.333133351998666745392826e-13, 3.999200106656000853276448e-5, 1.999600046662666942206223e-9],
    [2.0, 0.1, 1e-2, 9.801986733067553022208141e-1, -9.900663346622348889592948e-4, 9.900663346622348889592948e-3, -4.966832668882555520352606e-6, 1.313518674499861011431394e-7, 3.921056084767679056078931e-3, 1.960462694063024987912414e-5],
    [2.0, 0.1, 0.1, 8.187307530779818586699355e-1, -9.063462346100907066503225e-3, 9.063462346100907066503225e-2, -4.682688269495464667483877e-4, 1.150741569072033483827277e-4, 3.296799539643606992555671e-2, 1.642926993983779170228095e-3],
    [2.0, 0.1, 0.3, 5.488116360940264326284589e-1, -2.255941819529867836857705e-2, 2.255941819529867836857705e-1, -3.720290902350660815711473e-3, 2.351308311597590846721452e-3, 6.988057880877979033550224e-2, 1.017854698620746156940299e-2],
    [2.0, 0.1, 0.5, 3.678794411714423215955238e-1, -3.160602794142788392022381e-2, 3.160602794142788392022381e-1, -9.196986029286058039888094e-3, 8.40456203622891486220239e-3, 8.646647167633873081060005e-2, 1.99788200446864024351476e-2],
    [2.0, 1.0, 1e-6, 9.999980000019999986666673e-1, -9.999990000006666663333335e-7, 9.999990000006666663333335e-7, -4.999996666668333332666667e-13, 1.333331333335199998666667e-18, 3.999992000010666656000009e-6, 1.999996000004666662666669e-12],
    [2.0, 1.0, 1e-4, 9.998000199986667333306668e-1, -9.999000066663333466662222e-5, 9.999000066663333466662222e-5, -4.999666683332666688888254e-9, 1.333133351998666745392826e-12, 3.999200106656000853276448e-4, 1.999600046662666942206223e-8],
    [2.0, 1.0, 1e-2, 9.801986733067553022208141e-1, -9.900663346622348889592948e-3, 9.900663346622348889592948e-3, -4.966832668882555520352606e-5, 1.313518674499861011431394e-6, 3.921056084767679056078931e-2, 1.960462694063024987912414e-4],
    [2.0, 1.0, 0.1, 8.187307530779818586699355e-1, -9.063462346100907066503225e-2, 9.063462346100907066503225e-2, -4.682688269495464667483877e-3, 1.150741569072033483827277e-3, 3.296799539643606992555671e-1, 1.642926993983779170228095e-2],
    [2.0, 1.0, 0.3, 5.488116360940264326284589e-1, -2.255941819529867836857705e-1, 2.255941819529867836857705e-1, -3.720290902350660815711473e-2, 2.351308311597590846721452e-2, 6.988057880877979033550224e-1, 1.017854698620746156940299e-1],
    [2.0, 1.0, 0.5, 3.678794411714423215955238e-1, -3.160602794142788392022381e-1, 3.160602794142788392022381e-1, -9.196986029286058039888094e-2, 8.40456203622891486220239e-2, 8.646647167633873081060005e-1, 1.99788200446864024351476e-1],
    [5.0, 0.1, 1e-6, 9.999950000124999791666927e-1, -9.999975000041666614583385e-8, 9.999975000041666614583385e-7, -4.999991666677083322916675e-14, 3.333320833362499947916744e-19, 9.999950000166666250000833e-7, 4.999975000072916510416936e-13],
    [5.0, 0.1, 1e-4, 9.995001249791692705729384e-1, -9.99750041661458854123267e-6, 9.99750041661458854123267e-5, -4.999166770822917534660222e-10, 3.332083624947924354182277e-13, 9.995001666250083319446428e-5, 4.997500729010443572483131e-9],
    [5.0, 0.1, 1e-2, 9.512294245007140090914253e-1, -9.754115099857198181714936e-4, 9.754115099857198181714936e-3, -4.917698002856036365701279e-6, 3.211198675858528058088787e-7, 9.516258196404042683575094e-3, 4.75713806906310996279684e-5],
    [5.0, 0.1, 0.1, 6.065306597126334236037995e-1, -7.869386805747331527924009e-3, 7.869386805747331527924009e-2, -4.261226388505336944151981e-4, 2.329727907163654912786975e-4, 6.321205588285576784044762e-2, 3.096362434923509487758494e-3],
    [5.0, 0.1, 0.3, 2.231301601484298289332805e-1, -1.553739679703140342133439e-2, 1.553739679703140342133439e-1, -2.892520640593719315733122e-3, 3.370934288903421491015118e-3, 9.502129316321360570206576e-2, 1.207053496142008570225563e-2],
    [5.0, 0.1, 0.5, 8.208499862389879516952867e-2, -1.835830002752202409660943e-2, 1.835830002752202409660943e-1, -6.328339994495595180678115e-3, 9.286408189986038854325915e-3, 9.93262053000914532903364e-2, 1.685135899502575753515157e-2],
    [5.0, 1.0, 1e-6, 9.999950000124999791666927e-1, -9.999975000041666614583385e-7, 9.999975000041666614583385e-7, -4.999991666677083322916675e-13, 3.333320833362499947916744e-18, 9.999950000166666250000833e-6, 4.999975000072916510416936e-12],
    [5.0, 1.0, 1e-4, 9.995001249791692705729384e-1, -9.99750041661458854123267e-5, 9.99750041661458854123267e-5, -4.999166770822917534660222e-9, 3.332083624947924354182277e-12, 9.995001666250083319446428e-4, 4.997500729010443572483131e-8],
    [5.0, 1.0, 1e-2, 9.512294245007140090914253e-1, -9.754115099857198181714936e-3, 9.754115099857198181714936e-3, -4.917698002856036365701279e-5, 3.211198675858528058088787e-6, 9.516258196404042683575094e-2, 4.75713806906310996279684e-4],
    [5.0, 1.0, 0.1, 6.065306597126334236037995e-1, -7.869386805747331527924009e-2, 7.869386805747331527924009e-2, -4.261226388505336944151981e-3, 2.329727907163654912786975e-3, 6.321205588285576784044762e-1, 3.096362434923509487758494e-2],
    [5.0, 1.0, 0.3, 2.231301601484298289332805e-1, -1.553739679703140342133439e-1, 1.553739679703140342133439e-1, -2.892520640593719315733122e-2, 3.370934288903421491015118e-2, 9.502129316321360570206576e-1, 1.207053496142008570225563e-1],
    [5.0, 1.0, 0.5, 8.208499862389879516952867e-2, -1.835830002752202409660943e-1, 1.835830002752202409660943e-1, -6.328339994495595180678115e-2, 9.286408189986038854325915e-2, 9.93262053000914532903364e-1, 1.685135899502575753515157e-1],
    [10.0, 0.1, 1e-6, 9.9999000004999983333375e-1, -9.999950000166666250000833e-8, 9.999950000166666250000833e-7, -4.999983333374999916666806e-14, 6.666616666899999166669127e-19, 1.999980000133332666669333e-6, 9.999900000583330833341944e-13],
    [10.0, 0.1, 1e-4, 9.990004998333749916680554e-1, -9.995001666250083319446428e-6, 9.995001666250083319446428e-5, -4.998333749916680553571677e-10, 6.661668999166912635926695e-13, 1.998001332666933244469835e-4, 9.990005830834194194507426e-9],
    [10.0, 0.1, 1e-2, 9.048374180359595731642491e-1, -9.516258196404042683575094e-4, 9.516258196404042683575094e-3, -4.837418035959573164249059e-6, 6.189190658564339870607292e-7, 1.812692469220181413300645e-2, 9.05591700606271234143739e-5],
    [10.0, 0.1, 0.1, 3.678794411714423215955238e-1, -6.321205588285576784044762e-3, 6.321205588285576784044762e-2, -3.678794411714423215955238e-4, 3.361824814491565944880956e-4, 8.646647167633873081060005e-2, 3.99576400893728048702952e-3],
    [10.0, 0.1, 0.3, 4.978706836786394297934242e-2, -9.502129316321360570206576e-3, 9.502129316321360570206576e-2, -2.049787068367863942979342e-3, 3.196669521294789413494324e-3, 9.975212478233336415769548e-2, 9.029046154409384724643603e-3],
    [10.0, 0.1, 0.5, 6.737946999085467096636048e-3, -9.93262053000914532903364e-3, 9.93262053000914532903364e-2, -4.006737946999085467096636e-3, 7.026906388066579383535009e-3, 9.999546000702375151484644e-2, 9.865695059315915506582635e-3],
    [10.0, 1.0, 1e-6, 9.9999000004999983333375e-1, -9.999950000166666250000833e-7, 9.999950000166666250000833e-7, -4.999983333374999916666806e-13, 6.666616666899999166669127e-18, 1.999980000133332666669333e-5, 9.999900000583330833341944e-12],
    [10.0, 1.0, 1e-4, 9.990004998333749916680554e-1, -9.995001666250083319446428e-5, 9.995001666250083319446428e-5, -4.998333749916680553571677e-9, 6.661668999166912635926695e-12, 1.998001332666933244469835e-3, 9.990005830834194194507426e-8],
    [10.0, 1.0, 1e-2, 9.048374180359595731642491e-1, -9.516258196404042683575094e-3, 9.516258196404042683575094e-3, -4.837418035959573164249059e-5, 6.189190658564339870607292e-6, 1.812692469220181413300645e-1, 9.05591700606271234143739e-4],
    [10.0, 1.0, 0.1, 3.678794411714423215955238e-1, -6.321205588285576784044762e-2, 6.321205588285576784044762e-2, -3.678794411714423215955238e-3, 3.361824814491565944880956e-3, 8.646647167633873081060005e-1, 3.99576400893728048702952e-2],
    [10.0, 1.0, 0.3, 4.978706836786394297934242e-2, -9.502129316321360570206576e-2, 9.502129316321360570206576e-2, -2.049787068367863942979342e-2, 3.196669521294789413494324e-2, 9.975212478233336415769548e-1, 9.029046154409384724643603e-2],
    [10.0, 1.0, 0.5, 6.737946999085467096636048e-3, -9.93262053000914532903364e-2, 9.93262053000914532903364e-2, -4.006737946999085467096636e-2, 7.026906388066579383535009e-2, 9.999546000702375151484644e-1, 9.865695059315915506582635e-2],
];
