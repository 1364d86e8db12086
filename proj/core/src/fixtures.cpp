#include <map>

#include "pcp/pointgen.hpp"

namespace pcp {

namespace {

// Frozen 13-point instances, one per proof branch the acceptance sweep
// has to visit. Each is in general position and dispatches to the
// matching branch deterministically; the layered ones were drawn from
// the seeded generators, the deep-case ones are hand-built rings whose
// second layer balances every outer halfplane.
const std::map<std::string, std::vector<std::pair<Coord, Coord>>>& fixture_table() {
    static const std::map<std::string, std::vector<std::pair<Coord, Coord>>> table = {
        {"convex_13",  // ch13_arcs
         {{863214, 254680}, {671664, 599055}, {357487, 825956}, {-79840, 896452}, {-497585, 749939}, {-801312, 409755}, {-899195, -38054}, {-789866, -431407}, {-488394, -755957}, {-133955, -889975}, {345319, -831116}, {686754, -581695}, {863470, -253809}}},
        {"layers_12_1",  // ch12_l2_1
         {{878679, 194738}, {654592, 617665}, {258358, 862120}, {-231831, 869629}, {-611417, 660431}, {-875383, 209056}, {-872431, -221052}, {-657898, -614142}, {-194545, -878722}, {266570, -859616}, {628119, -644567}, {874538, -212563}, {35237, 14550}}},
        {"layers_11_2",  // ch11_l2_2
         {{874646, 212121}, {610606, 661181}, {156547, 886280}, {-372736, 819187}, {-736019, 517953}, {-899599, -26872}, {-764288, -475251}, {-404312, -804072}, {170601, -883683}, {617700, -654558}, {859883, -265708}, {-48396, 35237}, {14550, -28370}}},
        {"hull10_outer",  // ch10_outer
         {{863286, 254437}, {544536, 716576}, {-27340, 899585}, {-565466, 700178}, {-859239, 267783}, {-857327, -273842}, {-527203, -729423}, {29012, -899532}, {497030, -750308}, {838329, -327422}, {536232, 434839}, {-332288, -401849}, {-743718, 76491}}},
        {"hull9_outer",  // ch9_outer
         {{854746, 281795}, {468487, 768453}, {-186109, 880547}, {-721123, 538500}, {-899919, -12048}, {-692636, -574679}, {-153845, -886753}, {477627, -762806}, {829960, -348090}, {-504821, -631996}, {434839, 543583}, {-297835, -34766}, {-363135, 133020}}},
        {"ch8_outer",  // ch8_outer
         {{802014, 408379}, {343303, 831951}, {-309317, 845176}, {-829800, 348472}, {-837908, -328497}, {-293551, -850781}, {301064, -848151}, {818190, -374921}, {266547, 304923}, {-263929, 307191}, {-316801, -252313}, {300633, -271375}, {-18330, 4287}}},
        {"ch8_quad_diag",  // ch8_l2_4_diag
         {{895395, 90931}, {606357, 665080}, {-706, 900000}, {-694121, 572884}, {-895650, -88381}, {-596436, -673991}, {63241, -897775}, {641965, -630778}, {221310, 685144}, {-671821, 258953}, {-273384, -666079}, {685658, -219710}, {-7319, 12488}}},
        {"ch8_pent_corner",  // ch8_l2_5_corner
         {{816490, 378607}, {632943, 639831}, {-61727, 897881}, {-712410, 549974}, {-845927, -307257}, {-208609, -875490}, {635406, -637384}, {786275, -437917}, {755518, -27004}, {259985, 709890}, {-596457, 464516}, {-624593, -425934}, {209608, -726361}}},
        {"ch8_pent_flat",  // ch8_l2_5_flat
         {{898368, 54183}, {588589, 680855}, {-44722, 898888}, {-656522, 615612}, {-899865, -15601}, {-560655, -704036}, {41252, -899054}, {671361, -599396}, {754152, 295558}, {-130428, 799430}, {-783265, 206386}, {-418462, -693534}, {571184, -574324}}},
        {"ch7_outer",  // ch7_outer
         {{772744, 461375}, {198928, 877740}, {-526849, 729678}, {-899986, 5024}, {-576342, -691252}, {260364, -861516}, {786444, -437614}, {306757, 264434}, {-304923, 266547}, {-307191, -263929}, {252313, -316801}, {-9703, -18330}, {4287, -20974}}},
        {"ch7_quad_k1",  // ch7_l2_4_k1
         {{893319, 109461}, {424428, 793638}, {-355361, 826873}, {-869612, 231895}, {-773891, -459448}, {-31327, -899455}, {646258, -626379}, {160167, 738839}, {-753149, 65595}, {-162682, -738289}, {752555, -72087}, {-93591, -168089}, {144845, 103429}}},
        {"ch7_quad_k2",  // ch7_l2_4_k2
         {{891241, 125256}, {497679, 749877}, {-335064, 835303}, {-854905, 281315}, {-767259, -470440}, {-65243, -897632}, {638297, -634489}, {412684, 611830}, {-594012, 437943}, {-399781, -620338}, {608934, -416946}, {-90111, 55443}, {120345, -77001}}},
        {"ch7_pent_center",  // ch7_l2_5_center
         {{891241, 125256}, {497679, 749877}, {-335064, 835303}, {-854905, 281315}, {-767259, -470440}, {-65243, -897632}, {638297, -634489}, {610595, 381542}, {-137382, 706772}, {-716922, 66507}, {-277852, -664227}, {516176, -501959}, {808, 913}}},
        {"ch7_pent_corner",  // ch7_l2_5_corner
         {{884259, 167588}, {477534, 762864}, {-246821, 865494}, {-867575, 239401}, {-726000, -531906}, {-81559, -896297}, {657617, -614442}, {723757, 274320}, {-128855, 763199}, {-751936, 183490}, {-430275, -643381}, {554947, -539546}, {497033, -520953}}},
        {"ch7_hex_single",  // ch7_l2_6_single
         {{891241, 125256}, {497679, 749877}, {-335064, 835303}, {-854905, 281315}, {-767259, -470440}, {-65243, -897632}, {638297, -634489}, {596203, 403660}, {-17591, 719785}, {-646026, 317884}, {-589068, -414004}, {26383, -719516}, {649319, -311102}}},
        {"ch7_hex_pair",  // ch7_l2_6_pair
         {{874471, -212839}, {872511, 220734}, {126890, 891010}, {-159711, 885716}, {-782421, 444767}, {-777115, -453974}, {18537, -899809}, {692992, 3288}, {342756, 602302}, {-355339, 594965}, {-692965, -6974}, {-333223, -607628}, {355566, -594829}}},
        {"hex_skew_ear",  // ch6_skew_ear
         {{822051, 366378}, {-51601, 898520}, {-808922, 394518}, {-796039, -419906}, {-91579, -895329}, {733824, -521059}, {-735686, -247056}, {-771113, 243688}, {141865, 121821}, {-72669, 416003}, {361561, -340800}, {-101322, -499589}, {-456556, 480728}}},
        {"hex_skew_heart",  // ch6_skew_heart
         {{814120, 383678}, {-17564, 899829}, {-801849, 408702}, {-760788, -480835}, {-61099, -897924}, {751722, -494888}, {184045, -321667}, {-385865, 348454}, {325573, -275717}, {-22611, -184439}, {-326152, 472364}, {-300476, -321095}, {-208935, -220930}}},
        {"hex_pivot",  // ch6_balanced_pivot
         {{799252, 413758}, {32239, 899422}, {-801201, 409972}, {-738370, -514597}, {18071, -899819}, {775655, -456464}, {-353128, -504821}, {536232, 434839}, {-332288, -401849}, {-743718, 76491}, {-34766, -737294}, {720972, -363135}, {133020, 215705}}},
        {"hex_corner",  // ch6_balanced_corner
         {{814470, 382934}, {58485, 898098}, {-750649, 496514}, {-788305, -434252}, {19954, -899779}, {742944, -507971}, {-235938, -297030}, {468068, -539985}, {172473, 478379}, {-767009, -226567}, {286939, -220888}, {-95222, 55807}, {577377, -92938}}},
        {"hull5_heart",  // ch5_heart
         {{880333, 187121}, {140791, 888920}, {-825354, 358874}, {-608031, -663550}, {422524, -794653}, {62354, 36000}, {24625, 67658}, {-38154, 61059}, {-68854, 21051}, {-66276, -28133}, {-19241, -69381}, {30997, -64986}, {68668, -21651}}},
        {"hull5_ear",  // ch5_ear
         {{756138, 488114}, {-241069, 867113}, {-898339, -54654}, {-189441, -879836}, {740650, -511310}, {111138, -672238}, {434839, 543583}, {-297835, -34766}, {-363135, 133020}, {215705, 43485}, {-3692, -317734}, {-156207, 550968}, {93315, -39665}}},
        {"hull4_dense",  // ch4_ear
         {{678675, 591100}, {-601292, 669662}, {-586270, -682853}, {712208, -550236}, {-421897, 111138}, {-353128, -504821}, {536232, 434839}, {-332288, -401849}, {133020, 215705}, {43485, -3692}, {-518561, 266215}, {550968, 93315}, {-39665, 423333}}},
        {"hull3_dense",  // ch3_ear
         {{519565, 734882}, {-897690, 64436}, {526495, -729934}, {434839, 543583}, {-297835, -34766}, {-363135, 133020}, {215705, 43485}, {-3692, -317734}, {93315, -39665}, {-277703, 165908}, {-293010, 162382}, {112057, 332641}, {234088, -145433}}},
    };
    return table;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : fixture_table()) names.push_back(name);
    return names;
}

PointSet fixture_points(const std::string& name) {
    const auto& table = fixture_table();
    auto it = table.find(name);
    if (it == table.end()) throw BadInput("unknown fixture: " + name);
    return PointSet::from_xy(it->second);
}

}  // namespace pcp
