"""Decomposition low-pass filter tables for the supported wavelets.

Autogenerated by tools/generate_filter_tables.py; do not edit by hand.
High-pass and reconstruction filters are derived from these via the
QMF and time-reversal relations.
"""

DEC_LO: dict[str, tuple[float, ...]] = {
    "haar": (
        0.7071067811865476,
        0.7071067811865476,
    ),
    "db1": (
        0.7071067811865476,
        0.7071067811865476,
    ),
    "db2": (
        -0.12940952255126037,
        0.2241438680420134,
        0.8365163037378079,
        0.48296291314453416,
    ),
    "db3": (
        0.03522629188570953,
        -0.08544127388202666,
        -0.13501102001025458,
        0.45987750211849154,
        0.8068915093110925,
        0.33267055295008263,
    ),
    "db4": (
        -0.010597401785069032,
        0.0328830116668852,
        0.030841381835560764,
        -0.18703481171909309,
        -0.027983769416859854,
        0.6308807679298589,
        0.7148465705529157,
        0.2303778133088965,
    ),
    "db5": (
        0.0033357252854737712,
        -0.012580751999081999,
        -0.006241490212798274,
        0.07757149384004572,
        -0.032244869584638375,
        -0.24229488706638203,
        0.13842814590132074,
        0.7243085284377729,
        0.6038292697971896,
        0.16010239797419293,
    ),
    "db6": (
        -0.0010773010853084796,
        0.004777257510945511,
        0.0005538422011614961,
        -0.03158203931748603,
        0.027522865530305727,
        0.09750160558732304,
        -0.12976686756726194,
        -0.22626469396543983,
        0.31525035170919763,
        0.7511339080210954,
        0.49462389039845306,
        0.11154074335010947,
    ),
    "db7": (
        0.00035371379997452024,
        -0.0018016407040474908,
        0.0004295779729213665,
        0.01255099855609984,
        -0.01657454163066688,
        -0.03802993693501441,
        0.08061260915108308,
        0.07130921926683026,
        -0.22403618499387498,
        -0.14390600392856498,
        0.4697822874051931,
        0.7291320908462351,
        0.3965393194819173,
        0.07785205408500918,
    ),
    "db8": (
        -0.00011747678412476953,
        0.0006754494064505693,
        -0.00039174037337694705,
        -0.004870352993451574,
        0.008746094047405777,
        0.013981027917398282,
        -0.044088253930794755,
        -0.017369301001807547,
        0.12874742662047847,
        0.0004724845739132828,
        -0.2840155429615469,
        -0.015829105256349306,
        0.5853546836542067,
        0.6756307362972898,
        0.31287159091429995,
        0.05441584224310401,
    ),
    "db9": (
        3.93473203162716e-05,
        -0.0002519631889427101,
        0.00023038576352319597,
        0.0018476468830562265,
        -0.00428150368246343,
        -0.004723204757751397,
        0.022361662123679096,
        0.00025094711483145197,
        -0.06763282906132997,
        0.03072568147933338,
        0.14854074933810638,
        -0.09684078322297646,
        -0.2932737832791749,
        0.13319738582500756,
        0.6572880780513005,
        0.6048231236901112,
        0.24383467461259034,
        0.038077947363878345,
    ),
    "db10": (
        -1.3264202894521244e-05,
        9.358867032006959e-05,
        -0.00011646685512928545,
        -0.0006858566949597116,
        0.001992405295185056,
        0.001395351747052901,
        -0.010733175483330575,
        0.0036065535669561697,
        0.033212674059341,
        -0.029457536821875813,
        -0.07139414716639708,
        0.09305736460357235,
        0.12736934033579325,
        -0.19594627437737705,
        -0.24984642432731538,
        0.2811723436605775,
        0.6884590394536035,
        0.5272011889317256,
        0.1881768000776915,
        0.026670057900555554,
    ),
    "sym2": (
        -0.12940952255126037,
        0.2241438680420134,
        0.8365163037378079,
        0.48296291314453416,
    ),
    "sym3": (
        0.03522629188570953,
        -0.08544127388202666,
        -0.13501102001025458,
        0.45987750211849154,
        0.8068915093110925,
        0.33267055295008263,
    ),
    "sym4": (
        -0.07576571478950221,
        -0.029635527646002493,
        0.497618667632775,
        0.8037387518051321,
        0.29785779560530606,
        -0.09921954357663353,
        -0.012603967262031304,
        0.032223100604051466,
    ),
    "sym5": (
        0.027333068344998768,
        0.02951949092570626,
        -0.039134249302313844,
        0.19939753397685558,
        0.7234076904040407,
        0.633978963456792,
        0.01660210576451085,
        -0.17532808990805623,
        -0.021101834024689042,
        0.019538882735249827,
    ),
    "sym6": (
        0.015404109327044824,
        0.0034907120842221626,
        -0.11799011114852002,
        -0.04831174258569806,
        0.49105594192797375,
        0.787641141028651,
        0.3379294217281658,
        -0.07263752278637658,
        -0.02106029251237085,
        0.04472490177078139,
        0.0017677118642540077,
        -0.00780070832503238,
    ),
    "sym7": (
        0.012015419283549189,
        0.017213376300804502,
        -0.06490800354718848,
        -0.06413128980738582,
        0.3602184609062602,
        0.7819215932917282,
        0.4836109156822677,
        -0.05680447688966697,
        -0.1010109208684203,
        0.04474234946835238,
        0.020464207577546033,
        -0.01812660513133846,
        -0.003283297847466811,
        0.0022918339540537714,
    ),
    "sym8": (
        -0.0028119562654580796,
        0.0027148569848873347,
        0.03638006508224975,
        -0.0037430812221492743,
        -0.19933749673914436,
        -0.1608468807546481,
        0.3942752520859951,
        0.7653633377820792,
        0.4283615917939548,
        0.031642421046609505,
        0.03022005499843186,
        0.07751841927970034,
        0.017824408138294088,
        -0.007815655221774563,
        0.0021948620922243667,
        0.002273363291843112,
    ),
    "sym9": (
        0.0015355592602520325,
        0.0016071254606897809,
        -0.01003875594177298,
        -0.004542375868803877,
        0.043793932734191576,
        0.026200550410328975,
        -0.01639727648223578,
        0.27331927918169413,
        0.7233717917427511,
        0.5860481050896841,
        -0.011218287488879434,
        -0.2251528576424681,
        -0.031009484844558784,
        0.06000245124977048,
        0.008090489280069746,
        -0.011351209733040239,
        -0.0010211870732700073,
        0.0009757130386923262,
    ),
    "sym10": (
        0.0010978233758893593,
        0.0016180724981117623,
        -0.008904596148433364,
        -0.015711946337222803,
        0.018383297445559416,
        0.028529602810197816,
        -0.015090251325337796,
        0.17303821667574187,
        0.6313484894625419,
        0.6914425140212869,
        0.1380800079167899,
        -0.238554169701086,
        -0.08466210630735725,
        0.08373016820127681,
        0.03234011695074932,
        -0.02019249499170113,
        -0.005960939522784504,
        0.0035290529586334764,
        0.0004749393389306657,
        -0.00032223494869110025,
    ),
    "coif1": (
        -0.015655728135791993,
        -0.07273261951252645,
        0.3848648468648577,
        0.8525720202116004,
        0.33789766245748176,
        -0.07273261951252645,
    ),
    "coif2": (
        -0.000720549445520347,
        -0.001823208870911032,
        0.005611434819368834,
        0.02368017194684777,
        -0.059434418646431085,
        -0.07648859907828076,
        0.41700518442323903,
        0.8127236354494135,
        0.38611006682276283,
        -0.0673725547237256,
        -0.04146493678687178,
        0.01638733646320364,
    ),
    "coif3": (
        -3.4599773197272774e-05,
        -7.0983302506379e-05,
        0.0004662169598204029,
        0.0011175187708306303,
        -0.002574517688136797,
        -0.009007976136730624,
        0.015880544863669452,
        0.03455502757329773,
        -0.08230192710629981,
        -0.07179982161915484,
        0.42848347637737,
        0.7937772226260872,
        0.4051769024091182,
        -0.06112339000297254,
        -0.06577191128146936,
        0.023452696142077165,
        0.0077825964256727454,
        -0.0037935128643808015,
    ),
    "coif4": (
        -1.7849909144933466e-06,
        -3.2596479400307506e-06,
        3.1229861599195265e-05,
        6.233885431278718e-05,
        -0.0002599743371222568,
        -0.0005890202246332164,
        0.0012665610789256603,
        0.003751434697146086,
        -0.0056582838001308835,
        -0.015211728187697211,
        0.025082253337949608,
        0.03933442260558915,
        -0.09622042453595264,
        -0.06662747236681715,
        0.43438603311435653,
        0.7822389344242826,
        0.41530842700068227,
        -0.05607731960356926,
        -0.08126671024919373,
        0.026682304669604834,
        0.016068947131575025,
        -0.00734616793626805,
        -0.0016294924252267858,
        0.000892313902537003,
    ),
    "coif5": (
        -9.635471769048615e-08,
        -1.6289599099156464e-07,
        2.0654941597662735e-06,
        3.708499247660403e-06,
        -2.129787575084137e-05,
        -4.127776783347323e-05,
        0.00014046946939464208,
        0.000302151609009568,
        -0.0006378826740907585,
        -0.0016629718650248112,
        0.0024333312921644844,
        0.006764215874055656,
        -0.009164244937052419,
        -0.01976176341751868,
        0.03268355555498502,
        0.041289227100213315,
        -0.10557422642587472,
        -0.06203594614534419,
        0.43799160831741507,
        0.7742896217247117,
        0.42156618860542816,
        -0.05204314574293879,
        -0.09192002722176232,
        0.028168049485935143,
        0.02340813466464929,
        -0.010131110191113872,
        -0.004159367385233418,
        0.0021782832941765404,
        0.0003585706628332772,
        -0.00021209837503723494,
    ),
}
