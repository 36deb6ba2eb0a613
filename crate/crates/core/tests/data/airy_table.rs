// (x, Ai(x), Ai'(x)) computed in 30-digit arithmetic and rounded to f64.
pub const AIRY_TABLE: &[(f64, f64, f64)] = &[
    (-30.0, -0.08796818845684216, 1.228620602637485),
    (-29.63, 0.24112129719737238, -0.09790216835009569),
    (-29.26, -0.11904556843625265, -1.144326106080456),
    (-28.89, -0.14406732518628157, 1.0529246499670106),
    (-28.52, 0.23814783414937624, 0.2891434877952566),
    (-28.15, -0.0430701787492464, -1.2796928126714846),
    (-27.78, -0.20787042305195957, 0.6890167298107998),
    (-27.41, 0.19846097954006, 0.767905703691729),
    (-27.04, 0.06731374125885206, -1.2374005078149097),
    (-26.67, -0.2476392923656786, 0.08873327743207396),
    (-26.3, 0.09803691627202285, 1.1755124105485812),
    (-25.93, 0.18722712216180057, -0.8419544715969132),
    (-25.56, -0.21524736225861843, -0.6540543430069339),
    (-25.19, -0.06150151779182245, 1.2250813182012252),
    (-24.82, 0.2526330981641115, -0.03861986753451855),
    (-24.45, -0.07458102556043032, -1.1999122311839923),
    (-24.08, -0.21710389126448915, 0.6511934781864247),
    (-23.71, 0.18126928950883645, 0.8799016093349928),
    (-23.34, 0.13611330841832198, -1.0499195772471774),
    (-22.97, -0.24214971770046154, -0.4253284981964401),
    (-22.6, -0.03966936501931413, 1.2151609668289614),
    (-22.23, 0.2597336025166437, -0.030220264399757394),
    (-21.86, -0.05017561530071378, -1.1977511624765194),
    (-21.49, -0.2465682149802183, 0.40832218458317404),
    (-21.12, 0.12208187616827303, 1.0729310853722007),
    (-20.75, 0.217494143657597, -0.6817845239425816),
    (-20.38, -0.17341581676500054, -0.9099266756222543),
    (-20.01, -0.1851553728722523, 0.8566915645390748),
    (-19.64, 0.206606307497816, 0.7591303470601115),
    (-19.27, 0.1584895144883694, -0.9535967172232104),
    (-18.9, -0.22578996428749362, -0.6512678285274781),
    (-18.53, -0.14300688324270233, 0.9936967212015667),
    (-18.16, 0.23444163353434, 0.6018259121226829),
    (-17.79, 0.14167771021197176, -0.9907328527869184),
    (-17.42, -0.23395128576903645, -0.6157858313351867),
    (-17.05, -0.15559073787483446, 0.9472530100854875),
    (-16.68, 0.22289301460931038, 0.6898663208554545),
    (-16.31, 0.1838825745487967, -0.8539402792435516),
    (-15.94, -0.19688975629008826, -0.8111268984607614),
    (-15.57, -0.2227026741393651, 0.6919714068390844),
    (-15.2, 0.14936088016760757, 0.9521577832523489),
    (-14.83, 0.2633177312233651, -0.4399799921761155),
    (-14.46, -0.07388737016717574, -1.0650097035645982),
    (-14.09, -0.29013313199709084, 0.08815833715971298),
    (-13.72, -0.030885606454697904, 1.0792606372650793),
    (-13.35, 0.28062142269196405, 0.3394341824977853),
    (-12.98, 0.1536496311147615, -0.9137768652923212),
    (-12.61, -0.21061647217588855, -0.7597968486082067),
    (-12.24, -0.26267309541367867, 0.5133434303795652),
    (-11.87, 0.0686348795429288, 1.0216623967239389),
    (-11.5, 0.30542297004359265, 0.08772415432178444),
    (-11.13, 0.12147417995899094, -0.9447876133681307),
    (-10.76, -0.22774686021394086, -0.7024378644704427),
    (-10.39, -0.28259139344994416, 0.4361658406072256),
    (-10.02, 0.020248722494361257, 1.0023214438079424),
    (-9.65, 0.30106870918524015, 0.3454031071782126),
    (-9.28, 0.22700519478649087, -0.6949351087351666),
    (-8.91, -0.10808653444509693, -0.9229272608204965),
    (-8.54, -0.3267536954896582, -0.144400523072837),
    (-8.17, -0.19961130658195556, 0.7583462684483377),
    (-7.8, 0.13285154462606732, 0.8711554042465893),
    (-7.43, 0.33808029535813977, 0.14588484808394894),
    (-7.06, 0.22802277815333138, -0.6838563382927271),
    (-6.69, -0.08716434056668551, -0.8823683936608946),
    (-6.32, -0.3309449138816708, -0.3411695280976979),
    (-5.95, -0.3094327609325542, 0.44144609253993217),
    (-5.58, -0.05125995832069293, 0.8567194928802067),
    (-5.21, 0.24611613140445565, 0.6528842516250573),
    (-4.84, 0.3800429367362678, 0.03655369691318473),
    (-4.47, 0.27587236960277783, -0.5615905050841131),
    (-4.1, 0.009676979518714332, -0.802872535418215),
    (-3.73, -0.26407027818154033, -0.6131654333083942),
    (-3.36, -0.4104410371550523, -0.15372372518635408),
    (-2.99, -0.37561185542128944, 0.32588160946293054),
    (-2.62, -0.1912399047224943, 0.6319864479280849),
    (-2.25, 0.06159865877700528, 0.6950162067015286),
    (-1.88, 0.2980518643015384, 0.5570376941553573),
    (-1.51, 0.4611298894487941, 0.316150561647766),
    (-1.14, 0.531494517769159, 0.06989524273717654),
    (-0.77, 0.5202139041633886, -0.11810156886049827),
    (-0.4, 0.4542256138886674, -0.22503140930241503),
    (-0.03, 0.3627910209064983, -0.25865731208411624),
    (0.34, 0.26906968105848045, -0.2416414046095918),
    (0.71, 0.18717051724987332, -0.19852464244011012),
    (1.08, 0.12299121911657948, -0.1484153560861446),
    (1.45, 0.07675466712669955, -0.10285537923817997),
    (1.82, 0.045682552663433545, -0.06684671675493811),
    (2.19, 0.02601820479717517, -0.04106387346807119),
    (2.56, 0.014219865401995362, -0.023980170776950315),
    (2.93, 0.007475194784364215, -0.013370585126963892),
    (3.3, 0.0037872884268267534, -0.007142487785884738),
    (3.67, 0.0018525370468508186, -0.0036657632572098687),
    (4.04, 0.0008761909913637309, -0.0018117782217684192),
    (4.41, 0.00040124428388313096, -0.0008640257414827803),
    (4.78, 0.00017812268653691246, -0.0003982584736332341),
    (5.15, 7.673606549647035e-05, -0.00017768923013408228),
    (5.52, 3.211255844995472e-05, -7.683864679628366e-05),
    (5.89, 1.3065696864645166e-05, -3.224208911426922e-05),
    (6.26, 5.1728156248252165e-06, -1.3141411006634204e-05),
    (6.63, 1.9942710356287667e-06, -5.2076656579584e-06),
    (7.0, 7.492128863997167e-07, -2.008150894738792e-06),
    (7.37, 2.744538661911208e-07, -7.541189614931354e-07),
    (7.74, 9.809260759261181e-08, -2.759842351789206e-07),
    (8.11, 3.422539487330098e-08, -9.849546756446429e-08),
    (8.48, 1.1663606957472415e-08, -3.430057427344889e-08),
    (8.85, 3.8842085286005205e-09, -1.1662367775708058e-08),
    (9.22, 1.2646137719018333e-09, -3.873492951966228e-09),
    (9.59, 4.02705945966653e-10, -1.25737621383694e-09),
    (9.96, 1.2547916795032674e-10, -3.990953163141781e-10),
    (10.33, 3.827171247242107e-11, -1.2391602744151803e-10),
    (10.7, 1.143055704006619e-11, -3.765282086865285e-11),
    (11.07, 3.3442037641993735e-12, -1.1200995806598596e-11),
    (11.44, 9.587363163745244e-13, -3.2633658450375606e-12),
    (11.81, 2.694171563117651e-13, -9.31488799456798e-13),
    (12.18, 7.42340563246432e-14, -2.605778282024087e-13),
    (12.55, 2.0061317854868896e-14, -7.146337318398495e-14),
    (12.92, 5.318817647991258e-15, -1.9219747571666695e-14),
    (13.29, 1.383840847264884e-15, -5.070560135617503e-15),
    (13.66, 3.534141476063481e-16, -1.3125890536686129e-15),
    (14.03, 8.861666689608621e-17, -3.334890639873684e-16),
    (14.4, 2.1821441453045465e-17, -8.318117376481668e-17),
    (14.77, 5.278214089727053e-18, -2.0373485924732625e-17),
    (15.14, 1.2543579610201102e-18, -4.9012242939863624e-18),
    (15.51, 2.929401353811033e-19, -1.158353065466379e-18),
    (15.88, 6.724313188337246e-20, -2.6901037955697e-19),
    (16.25, 1.5174500257090202e-20, -6.140164186475071e-20),
    (16.62, 3.367139853662486e-21, -1.377722431320548e-20),
    (16.99, 7.347987096843481e-22, -3.039479218389472e-21),
    (17.36, 1.5772978257099327e-22, -6.594386179955312e-22),
    (17.73, 3.330982133742428e-23, -1.4072351273140185e-22),
    (18.1, 6.92176842161265e-24, -2.954288042648872e-23),
    (18.47, 1.4155287177208175e-24, -6.102492416795433e-24),
    (18.84, 2.8493498258466082e-25, -1.2405148554122366e-24),
    (19.21, 5.646313099611055e-26, -2.4820291943276394e-25),
    (19.58, 1.1016432454809608e-26, -4.888659729541122e-26),
    (19.95, 2.116590122530987e-27, -9.480179988255084e-27),
    (20.32, 4.0051016128261115e-28, -1.8103025689767777e-27),
    (20.69, 7.465018157178122e-29, -3.4045188010405765e-28),
    (21.06, 1.370713695252657e-29, -6.306534191738607e-29),
    (21.43, 2.479805871752413e-30, -1.1508402811404092e-29),
    (21.8, 4.420778119854058e-31, -2.0691211055876687e-30),
    (22.17, 7.766825130645214e-32, -3.6657184606562525e-31),
    (22.54, 1.3449447997108176e-32, -6.400132991263801e-32),
    (22.91, 2.2957922992224706e-33, -1.1013581625150879e-32),
    (23.28, 3.863472178398945e-34, -1.8682264377177296e-33),
    (23.65, 6.41045311546749e-35, -3.1242245091955553e-34),
    (24.02, 1.0488490024758019e-35, -5.151289436346217e-35),
    (24.39, 1.6923764983600066e-36, -8.375268113402496e-36),
    (24.76, 2.6933091429344986e-37, -1.3428808263227183e-36),
    (25.13, 4.2279033513098475e-38, -2.1236262322052793e-37),
    (25.5, 6.547220618442566e-39, -3.312572393834599e-38),
    (25.87, 1.0002867063004445e-39, -5.0973353254155214e-39),
    (26.24, 1.5078885123497647e-40, -7.73845823295799e-40),
    (26.61, 2.243013708471145e-41, -1.1591537752959715e-40),
    (26.98, 3.292702460329029e-42, -1.713342183129764e-41),
    (27.35, 4.7705670782622895e-43, -2.4992161228690752e-42),
    (27.72, 6.822173997054066e-44, -3.597986704340581e-43),
    (28.09, 9.630490161236726e-45, -5.112695262146203e-44),
    (28.46, 1.3420961223194363e-45, -7.171544202768583e-45),
    (28.83, 1.846564934082923e-46, -9.930815780892782e-46),
    (29.2, 2.5085727165204636e-47, -1.3576973725955065e-46),
    (29.57, 3.3651521182763117e-48, -1.8327467816876644e-47),
    (29.94, 4.457924458631631e-49, -2.4429711666913098e-48),
];
