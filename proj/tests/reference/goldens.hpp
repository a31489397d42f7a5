#pragma once

// Generated by generate_goldens.py (mpmath, 30 digits). Do not edit.

namespace goldens {

struct Fresnel { double z, s, c; };
inline constexpr Fresnel kFresnel[] = {
    {0.3, 0.014116998006576585807, 0.29940097605204721038},
    {1.0, 0.43825914739035476608, 0.77989340037682282947},
    {1.6, 0.63888768350938090306, 0.36546168344048770958},
    {2.5, 0.61918175581959293611, 0.45741300964177704525},
    {7.0, 0.49970478945344677587, 0.54546709254696981033},
};

struct Bessel { double z, j0, y0; };
inline constexpr Bessel kBessel[] = {
    {0.5, 0.93846980724081290423, -0.44451873350670655715},
    {1.0, 0.76519768655796655145, 0.088256964215676957983},
    {2.0, 0.22389077914123566805, 0.5103756726497451196},
    {5.0, -0.17759677131433830435, -0.30851762524903378007},
    {8.0, 0.17165080713755390609, 0.22352148938756622053},
    {12.0, 0.047689310796833536624, -0.22523731263436143369},
    {20.0, 0.16702466434058315473, 0.062640596809383831162},
};

struct GammaValue { double x, value; };
inline constexpr GammaValue kGamma[] = {
    {-2.5, -0.94530872048294188123},
    {-0.5, -3.5449077018110320546},
    {0.3, 2.9915689876875906283},
    {1.7, 0.90863873285329044998},
    {4.2, 7.7566895357931776387},
};

// Gamma(a, i y)
struct IncGamma { double a, y, re, im; };
inline constexpr IncGamma kIncompleteGamma[] = {
    {-1.5, -0.5, -1.4956173446016993802, -0.19636991517834938777},
    {-1.5, 0.5, -1.4956173446016993802, 0.19636991517834938777},
    {-1.5, -1.0, -0.29479260118713521617, -0.32418088935605888902},
    {-1.5, 1.0, -0.29479260118713521617, 0.32418088935605888902},
    {-1.5, -5.0, -0.0095557828141559114527, 0.012193420456388261755},
    {-1.5, 5.0, -0.0095557828141559114527, -0.012193420456388261755},
    {-1.0, -0.5, -1.1366351560150189019, 0.67747621502891550216},
    {-1.0, 0.5, -1.1366351560150189019, -0.67747621502891550216},
    {-1.0, -1.0, -0.50406706190692837199, -0.084410950559573886889},
    {-1.0, 1.0, -0.50406706190692837199, 0.084410950559573886889},
    {-1.0, -5.0, 0.0017551052759838151602, 0.035867355242422770936},
    {-1.0, 5.0, 0.0017551052759838151602, -0.035867355242422770936},
    {-0.5, -0.5, -0.47059018408660236245, 1.0908689193398635133},
    {-0.5, 0.5, -0.47059018408660236245, -1.0908689193398635133},
    {-0.5, -1.0, -0.53487236211877285063, 0.27331291887479214588},
    {-0.5, 1.0, -0.53487236211877285063, -0.27331291887479214588},
    {-0.5, -5.0, 0.057040998609944063529, 0.060297937389123804396},
    {-0.5, 5.0, 0.057040998609944063529, -0.060297937389123804396},
    {0.0, -0.5, 0.17778407880661290134, 1.0776889087518299301},
    {0.0, 0.5, 0.17778407880661290134, -1.0776889087518299301},
    {0.0, -1.0, -0.33740392290096813466, 0.62471325642771360429},
    {0.0, 1.0, -0.33740392290096813466, -0.62471325642771360429},
    {0.0, -5.0, 0.19002974965664387862, 0.020865081850222481957},
    {0.0, 5.0, 0.19002974965664387862, -0.020865081850222481957},
    {0.5, -0.5, 0.63345211532947089707, 0.81157364082464395972},
    {0.5, 0.5, 0.63345211532947089707, -0.81157364082464395972},
    {0.5, -1.0, 0.05447776590009023766, 0.84040480446207960195},
    {0.5, 1.0, 0.05447776590009023766, -0.84040480446207960195},
    {0.5, -5.0, 0.36441984106355895338, -0.24368559063811288395},
    {0.5, 5.0, 0.36441984106355895338, 0.24368559063811288395},
    {1.5, -0.5, 0.99523010791202330673, 0.20670830876923712194},
    {1.5, 0.5, 0.99523010791202330673, -0.20670830876923712194},
    {1.5, -1.0, 1.0043001468495207937, 0.63316081739033598863},
    {1.5, 1.0, 1.0043001468495207937, -0.63316081739033598863},
    {1.5, -5.0, -0.88547318918597543207, -2.0865444971617113677},
    {1.5, 5.0, -0.88547318918597543207, 2.0865444971617113677},
};

struct Hyp2F1 { double a, b, c, z, value; };
inline constexpr Hyp2F1 kHyp2F1[] = {
    {0.5, 0.5, 1.5, -0.25, 0.962423650119206895},
    {1.0, 2.25, 3.25, -0.9, 0.6268636183205024996},
    {0.5, 4.5, 5.5, -2.25, 0.59703688415544120799},
    {1.0, 0.75, 1.75, -4.0, 0.46114686734199470555},
};

// 2F2(1/2, 1/2; 3/2, 3/2; i x)
struct Hyp2F2 { double x, re, im; };
inline constexpr Hyp2F2 kHyp2F2[] = {
    {0.5, 0.99503202212979582046, 0.055132530816941578646},
    {1.0, 0.98050627021181736864, 0.10777774684256268012},
    {2.0, 0.92772582607176806434, 0.19710613303544728985},
    {10.0, 0.58057930821148777861, 0.26796914794239336164},
};

struct SiCi { double alpha, z, si, ci; };
inline constexpr SiCi kSiCi[] = {
    {-1.5, 0.5, 1.196415665071717087, 0.91870666778444109094},
    {-1.5, 2.0, 0.032028252600076459719, -0.10880072369047687631},
    {0.0, 0.5, 1.0776889087518299301, 0.17778407880661290134},
    {0.0, 2.0, -0.034616650007798229345, -0.4229808287748649957},
    {0.5, 0.5, 1.0217875111657930738, -0.12595093855292938499},
    {0.5, 2.0, -0.15753884538589201103, -0.63493489637901390099},
};

// int_0^inf sin t, cos t / (t + x)^(alpha + 1/2) dt
struct HalfPower { int alpha; double x, sin, cos; };
inline constexpr HalfPower kHalfPower[] = {
    {0, 0.5, 0.95708699830990754975, 0.3793386805519317485},
    {0, 1.0, 0.80952548174740884437, 0.23219939005526460574},
    {0, 2.0, 0.64290395961989652163, 0.12097648180703376319},
    {1, 0.5, 0.758677361103863497, 0.91425312812637499811},
    {1, 1.0, 0.46439878011052921149, 0.38094903650518231126},
    {1, 2.0, 0.24195296361406752639, 0.12840564313330200554},
    {2, 0.5, 0.60950208541758333207, 1.3798331757615510671},
    {2, 1.0, 0.25396602433678820751, 0.35706747992631385901},
    {2, 2.0, 0.085603762088868003692, 0.074400284652804157209},
    {3, 0.5, 0.55193327030462042683, 2.0189408656299187453},
    {3, 1.0, 0.1428269919705255436, 0.298413590265284717},
    {3, 2.0, 0.029760113861121662884, 0.036469173283107550963},
    {4, 0.5, 0.57684024732283392722, 3.0747929224800399896},
    {4, 1.0, 0.085261025790081347714, 0.24490657372270698754},
    {4, 2.0, 0.01041976379517358599, 0.016750923939199079333},
    {5, 0.5, 0.68328731610667555324, 4.9001281668103748564},
    {5, 1.0, 0.054423683049490441676, 0.20327532760220414495},
    {5, 2.0, 0.0037224275420442398518, 0.0075054244508856965079},
};

// int_0^inf sin, cos (c z^2) w(z) dz
struct Tail { double c, sin, cos; };
inline constexpr Tail kRadicalTail[] = {
    {0.5, 0.56812353069120636304, 0.9001966887259217671},
    {2.0, 0.38304162881494545037, 0.46825926203070970168},
    {50.0, 0.088170047652070578404, 0.089055447812695320673},
};
inline constexpr Tail kPoleTail[] = {
    {0.5, 0.3620500672281594778, 0.83748059839450394986},
    {2.0, 0.32706954329814149298, 0.47869107822958832482},
    {7.0, 0.217803259570665198, 0.24958027090346258362},
};

// int_0^gamma sin, cos (c z^2) / sqrt(z^2 + 1) and / (z^2 + 1)
struct Head { double c, gamma, radical_sin, radical_cos, pole_sin, pole_cos; };
inline constexpr Head kHeads[] = {
    {1.0, 1.0, 0.24903800968862944494, 0.8078703728778686238, 0.20146279818617941561, 0.72854189218190569109},
    {5.0, 0.3, 0.043215102919840683702, 0.28983836681712875744, 0.042111463050768838595, 0.28579967287096038618},
    {1.0, 1.5, 0.54251943244900204846, 0.81213626664345002075, 0.38637520389086813808, 0.73598763734800503305},
    {10.0, 0.5, 0.24893626369607621766, 0.26467610561948188785, 0.23503223286688381421, 0.26321383441080310845},
};

struct Full { double a, b, zeta, radical_sin, radical_cos, pole_sin, pole_cos; };
inline constexpr Full kFull[] = {
    {1.0, 2.0, 1.0, 0.49826494947386386161, 0.22773934152826045804, 0.30070747442816872728, 0.18797132309594257433},
    {0.5, 4.0, 2.0, 0.27780446528781836424, 0.094503872256629650559, 0.13429487690027575289, 0.052851538884076602962},
    {1.0, 1.5, 0.5, 0.78760483135087588936, 0.56018778157584789648, 0.44816898744092987108, 0.4674062883124414862},
};

// int_0^inf sin t / sqrt((t + 0.5)(t + 1)(t + 2)) dt
inline constexpr double kThreeRadical = 0.43889286754569045745;

// int_0^inf sin, cos (zeta t) / (t + x)^p dt
struct General { double p, x, zeta, sin, cos; };
inline constexpr General kGeneral[] = {
    {0.33333333333333333333, 1.0, 1.0, 0.87525528672218001953, 0.17090029533626588667},
    {2.3333333333333333333, 1.0, 1.0, 0.28067560487509495606, 0.365474335493401755},
    {2.0, 1.0, 1.0, 0.34337796155642703283, 0.37855037576418664236},
    {1.0, 1.0, 2.0, 0.39902098859418384689, 0.14454530303733242046},
    {2.3333333333333333333, 0.5, 0.5, 0.47319224233983311067, 1.5691411726276385427},
};

// int_0^inf ln(t + x) sin t / sqrt(t + x) dt
struct LogIntegral { double x, value; };
inline constexpr LogIntegral kLogIntegral[] = {
    {0.5, 0.16177546871628292969},
    {1.0, 0.39410320685967552689},
    {2.0, 0.59372118407733653873},
};

} // namespace goldens
