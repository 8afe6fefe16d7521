#include "fmzv/relation_table.hpp"

namespace fmzv {

namespace {

struct Row {
  const char* target;
  int coefficients[4];
};

// Canonical weight-10 order, basis rows omitted.
constexpr Row kRows[] = {
    {"(10)", {0,0,0,1}},
    {"(9,1)", {0,0,0,1}},
    {"(8,2)", {0,0,0,1}},
    {"(7,3)", {0,0,0,1}},
    {"(7,1,2)", {8,1,0,2}},
    {"(7,1,1,1)", {-6,1,0,4}},
    {"(6,4)", {0,0,0,1}},
    {"(6,2,2)", {0,7,2,2}},
    {"(6,2,1,1)", {2,-7,0,4}},
    {"(6,1,3)", {-6,-1,0,1}},
    {"(6,1,2,1)", {8,3,1,1}},
    {"(6,1,1,2)", {-8,-7,-2,2}},
    {"(6,1,1,1,1)", {-80,47,2,64}},
    {"(5,5)", {0,0,0,1}},
    {"(5,4,1)", {14,7,3,1}},
    {"(5,3,2)", {-72,-33,-6,2}},
    {"(5,3,1,1)", {46,19,0,4}},
    {"(5,2,3)", {24,4,0,1}},
    {"(5,2,2,1)", {-34,-11,-3,1}},
    {"(5,2,1,2)", {19,12,3,1}},
    {"(5,2,1,1,1)", {-232,-305,-34,64}},
    {"(5,1,4)", {6,1,0,2}},
    {"(5,1,3,1)", {-34,-15,-4,4}},
    {"(5,1,2,2)", {66,25,4,4}},
    {"(5,1,2,1,1)", {752,293,46,64}},
    {"(5,1,1,3)", {-42,-7,0,4}},
    {"(5,1,1,2,1)", {62,19,13,16}},
    {"(5,1,1,1,2)", {-464,-301,-70,64}},
    {"(5,1,1,1,1,1)", {-80,47,2,64}},
    {"(4,6)", {0,0,0,1}},
    {"(4,5,1)", {-34,-15,-6,2}},
    {"(4,4,2)", {48,15,2,2}},
    {"(4,4,1,1)", {-3,0,1,1}},
    {"(4,3,3)", {36,20,4,1}},
    {"(4,3,2,1)", {62,17,8,4}},
    {"(4,3,1,2)", {-57,-24,-5,1}},
    {"(4,3,1,1,1)", {1360,693,110,64}},
    {"(4,2,4)", {-48,-15,-2,1}},
    {"(4,2,3,1)", {130,45,12,4}},
    {"(4,2,2,2)", {12,2,0,1}},
    {"(4,2,2,1,1)", {-2152,-667,-118,64}},
    {"(4,2,1,3)", {9,-2,-1,1}},
    {"(4,2,1,2,1)", {-88,-13,-28,16}},
    {"(4,2,1,1,2)", {1432,813,186,64}},
    {"(4,2,1,1,1,1)", {-232,-305,-34,64}},
    {"(4,1,5)", {6,1,0,2}},
    {"(4,1,4,1)", {-9,-5,-1,1}},
    {"(4,1,3,2)", {90,57,12,4}},
    {"(4,1,3,1,1)", {-704,-365,-70,64}},
    {"(4,1,2,3)", {-198,-89,-16,4}},
    {"(4,1,2,2,1)", {860,401,80,32}},
    {"(4,1,2,1,2)", {-1504,-787,-130,64}},
    {"(4,1,2,1,1,1)", {208,53,-18,64}},
    {"(4,1,1,4)", {30,12,2,1}},
    {"(4,1,1,3,1)", {-468,-169,-48,32}},
    {"(4,1,1,2,2)", {240,61,6,64}},
    {"(4,1,1,2,1,1)", {262,127,29,16}},
    {"(4,1,1,1,3)", {240,159,34,32}},
    {"(4,1,1,1,2,1)", {-952,-579,-78,64}},
    {"(4,1,1,1,1,2)", {50,37,3,16}},
    {"(4,1,1,1,1,1,1)", {-6,1,0,4}},
    {"(3,7)", {0,0,0,1}},
    {"(3,6,1)", {6,1,1,1}},
    {"(3,5,2)", {24,25,6,2}},
    {"(3,5,1,1)", {-34,-27,-8,4}},
    {"(3,4,3)", {-72,-40,-8,1}},
    {"(3,4,2,1)", {8,10,1,1}},
    {"(3,4,1,2)", {106,47,10,2}},
    {"(3,4,1,1,1)", {-314,-193,-35,16}},
    {"(3,3,4)", {36,20,4,1}},
    {"(3,3,3,1)", {-42,-21,-4,2}},
    {"(3,3,2,2)", {-24,-18,-4,1}},
    {"(3,3,2,1,1)", {144,119,20,16}},
    {"(3,3,1,3)", {42,21,4,2}},
    {"(3,3,1,2,1)", {-804,-399,-48,32}},
    {"(3,3,1,1,2)", {192,317,62,64}},
    {"(3,3,1,1,1,1)", {752,293,46,64}},
    {"(3,2,5)", {24,4,0,1}},
    {"(3,2,4,1)", {-4,4,0,1}},
    {"(3,2,3,2)", {-36,-20,-4,1}},
    {"(3,2,3,1,1)", {1596,673,144,32}},
    {"(3,2,2,3)", {48,36,8,1}},
    {"(3,2,2,2,1)", {-336,-447,-66,32}},
    {"(3,2,2,1,2)", {-984,-873,-258,64}},
    {"(3,2,2,1,1,1)", {152,613,138,64}},
    {"(3,2,1,4)", {-198,-89,-16,4}},
    {"(3,2,1,3,1)", {1800,783,222,64}},
    {"(3,2,1,2,2)", {648,507,114,32}},
    {"(3,2,1,2,1,1)", {-1008,-521,-108,16}},
    {"(3,2,1,1,3)", {-2208,-1369,-286,64}},
    {"(3,2,1,1,2,1)", {2576,1549,206,64}},
    {"(3,2,1,1,1,2)", {296,95,38,32}},
    {"(3,2,1,1,1,1,1)", {2,-7,0,4}},
    {"(3,1,6)", {-6,-1,0,1}},
    {"(3,1,5,1)", {34,15,4,4}},
    {"(3,1,4,2)", {-30,-19,-4,2}},
    {"(3,1,4,1,1)", {-656,-231,-58,64}},
    {"(3,1,3,3)", {42,21,4,2}},
    {"(3,1,3,2,1)", {280,121,34,64}},
    {"(3,1,3,1,2)", {80,23,2,64}},
    {"(3,1,3,1,1,1)", {-128,-45,-6,64}},
    {"(3,1,2,4)", {9,-2,-1,1}},
    {"(3,1,2,3,1)", {-1800,-783,-222,64}},
    {"(3,1,2,2,2)", {144,465,126,64}},
    {"(3,1,2,2,1,1)", {1020,353,80,32}},
    {"(3,1,2,1,3)", {1296,657,126,32}},
    {"(3,1,2,1,2,1)", {-312,-141,30,64}},
    {"(3,1,2,1,1,2)", {-1460,-753,-152,32}},
    {"(3,1,2,1,1,1,1)", {46,19,0,4}},
    {"(3,1,1,5)", {-42,-7,0,4}},
    {"(3,1,1,4,1)", {210,70,21,16}},
    {"(3,1,1,3,2)", {30,19,4,8}},
    {"(3,1,1,3,1,1)", {-944,-391,-90,64}},
    {"(3,1,1,2,3)", {-2208,-1369,-286,64}},
    {"(3,1,1,2,2,1)", {-200,5,-22,32}},
    {"(3,1,1,2,1,2)", {2576,1363,290,64}},
    {"(3,1,1,2,1,1,1)", {-12,-5,0,1}},
    {"(3,1,1,1,4)", {240,159,34,32}},
    {"(3,1,1,1,3,1)", {24,11,2,32}},
    {"(3,1,1,1,2,2)", {-576,-509,-118,64}},
    {"(3,1,1,1,2,1,1)", {38,13,0,4}},
    {"(3,1,1,1,1,3)", {96,93,22,32}},
    {"(3,1,1,1,1,2,1)", {-22,-11,0,4}},
    {"(3,1,1,1,1,1,2)", {2,3,0,4}},
    {"(3,1,1,1,1,1,1,1)", {-1,0,0,1}},
    {"(2,8)", {0,0,0,1}},
    {"(2,7,1)", {-8,1,0,2}},
    {"(2,6,2)", {0,-7,-2,1}},
    {"(2,6,1,1)", {10,13,4,4}},
    {"(2,5,3)", {24,25,6,2}},
    {"(2,5,2,1)", {11,0,0,1}},
    {"(2,5,1,2)", {-23,-9,-2,1}},
    {"(2,5,1,1,1)", {272,269,70,64}},
    {"(2,4,4)", {48,15,2,2}},
    {"(2,4,3,1)", {-10,-4,0,1}},
    {"(2,4,2,2)", {-12,-2,0,1}},
    {"(2,4,2,1,1)", {728,93,-30,64}},
    {"(2,4,1,3)", {-30,-19,-4,2}},
    {"(2,4,1,2,1)", {656,515,50,64}},
    {"(2,4,1,1,2)", {34,-17,-1,16}},
    {"(2,4,1,1,1,1)", {-98,-45,-3,16}},
    {"(2,3,5)", {-72,-33,-6,2}},
    {"(2,3,4,1)", {-10,-11,-4,2}},
    {"(2,3,3,2)", {72,40,8,1}},
    {"(2,3,3,1,1)", {-2544,-1213,-206,64}},
    {"(2,3,2,3)", {-36,-20,-4,1}},
    {"(2,3,2,2,1)", {1848,1059,270,64}},
    {"(2,3,2,1,2)", {120,75,30,32}},
    {"(2,3,2,1,1,1)", {-184,-141,-44,16}},
    {"(2,3,1,4)", {90,57,12,4}},
    {"(2,3,1,3,1)", {-90,-36,-9,16}},
    {"(2,3,1,2,2)", {-864,-921,-222,64}},
    {"(2,3,1,2,1,1)", {860,625,144,32}},
    {"(2,3,1,1,3)", {30,19,4,8}},
    {"(2,3,1,1,2,1)", {-1592,-1101,-226,64}},
    {"(2,3,1,1,1,2)", {188,231,40,32}},
    {"(2,3,1,1,1,1,1)", {-2,-1,0,1}},
    {"(2,2,6)", {0,7,2,2}},
    {"(2,2,5,1)", {42,7,4,4}},
    {"(2,2,4,2)", {-12,-2,0,1}},
    {"(2,2,4,1,1)", {28,29,-4,32}},
    {"(2,2,3,3)", {-24,-18,-4,1}},
    {"(2,2,3,2,1)", {-752,-227,-86,32}},
    {"(2,2,3,1,2)", {140,83,32,32}},
    {"(2,2,3,1,1,1)", {316,49,16,32}},
    {"(2,2,2,4)", {12,2,0,1}},
    {"(2,2,2,3,1)", {54,72,9,16}},
    {"(2,2,2,2,2)", {0,0,0,1}},
    {"(2,2,2,2,1,1)", {112,1,-2,32}},
    {"(2,2,2,1,3)", {144,465,126,64}},
    {"(2,2,2,1,2,1)", {-528,-429,-6,64}},
    {"(2,2,2,1,1,2)", {80,23,2,8}},
    {"(2,2,2,1,1,1,1)", {-4,1,0,1}},
    {"(2,2,1,5)", {66,25,4,4}},
    {"(2,2,1,4,1)", {-792,-153,-42,64}},
    {"(2,2,1,3,2)", {-864,-921,-222,64}},
    {"(2,2,1,3,1,1)", {1144,601,130,64}},
    {"(2,2,1,2,3)", {648,507,114,32}},
    {"(2,2,1,2,2,1)", {492,69,24,32}},
    {"(2,2,1,2,1,2)", {312,141,-30,64}},
    {"(2,2,1,2,1,1,1)", {-30,-3,0,4}},
    {"(2,2,1,1,4)", {240,61,6,64}},
    {"(2,2,1,1,3,1)", {-160,-169,2,64}},
    {"(2,2,1,1,2,2)", {-432,-93,-6,16}},
    {"(2,2,1,1,2,1,1)", {4,0,0,1}},
    {"(2,2,1,1,1,3)", {-576,-509,-118,64}},
    {"(2,2,1,1,1,2,1)", {5,6,0,1}},
    {"(2,2,1,1,1,1,2)", {4,-1,0,1}},
    {"(2,2,1,1,1,1,1,1)", {0,-1,0,1}},
    {"(2,1,7)", {8,1,0,2}},
    {"(2,1,6,1)", {2,1,0,1}},
    {"(2,1,5,2)", {-23,-9,-2,1}},
    {"(2,1,5,1,1)", {344,139,34,32}},
    {"(2,1,4,3)", {106,47,10,2}},
    {"(2,1,4,2,1)", {-1440,-681,-126,64}},
    {"(2,1,4,1,2)", {160,55,10,32}},
    {"(2,1,4,1,1,1)", {72,47,6,32}},
    {"(2,1,3,4)", {-57,-24,-5,1}},
    {"(2,1,3,3,1)", {1592,653,98,64}},
    {"(2,1,3,2,2)", {140,83,32,32}},
    {"(2,1,3,2,1,1)", {-960,-321,-54,64}},
    {"(2,1,3,1,3)", {80,23,2,64}},
    {"(2,1,3,1,2,1)", {270,108,27,16}},
    {"(2,1,3,1,1,2)", {-400,-169,-46,32}},
    {"(2,1,3,1,1,1,1)", {6,1,0,4}},
    {"(2,1,2,5)", {19,12,3,1}},
    {"(2,1,2,4,1)", {80,-19,62,64}},
    {"(2,1,2,3,2)", {120,75,30,32}},
    {"(2,1,2,3,1,1)", {-720,-351,-114,64}},
    {"(2,1,2,2,3)", {-984,-873,-258,64}},
    {"(2,1,2,2,2,1)", {-306,-72,-27,16}},
    {"(2,1,2,2,1,2)", {120,75,30,16}},
    {"(2,1,2,2,1,1,1)", {10,-3,0,4}},
    {"(2,1,2,1,4)", {-1504,-787,-130,64}},
    {"(2,1,2,1,3,1)", {672,285,6,64}},
    {"(2,1,2,1,2,2)", {312,141,-30,64}},
    {"(2,1,2,1,2,1,1)", {-2,-5,0,2}},
    {"(2,1,2,1,1,3)", {2576,1363,290,64}},
    {"(2,1,2,1,1,2,1)", {-10,-4,0,1}},
    {"(2,1,2,1,1,1,2)", {-50,-17,0,4}},
    {"(2,1,2,1,1,1,1,1)", {10,4,0,1}},
    {"(2,1,1,6)", {-8,-7,-2,2}},
    {"(2,1,1,5,1)", {-200,-5,-34,64}},
    {"(2,1,1,4,2)", {34,-17,-1,16}},
    {"(2,1,1,4,1,1)", {12,9,2,8}},
    {"(2,1,1,3,3)", {192,317,62,64}},
    {"(2,1,1,3,2,1)", {1320,423,150,64}},
    {"(2,1,1,3,1,2)", {-400,-169,-46,32}},
    {"(2,1,1,3,1,1,1)", {-1,1,0,1}},
    {"(2,1,1,2,4)", {1432,813,186,64}},
    {"(2,1,1,2,3,1)", {-1160,-515,-62,64}},
    {"(2,1,1,2,2,2)", {80,23,2,8}},
    {"(2,1,1,2,2,1,1)", {0,0,0,1}},
    {"(2,1,1,2,1,3)", {-1460,-753,-152,32}},
    {"(2,1,1,2,1,2,1)", {22,13,0,2}},
    {"(2,1,1,2,1,1,2)", {16,4,0,1}},
    {"(2,1,1,2,1,1,1,1)", {-16,-5,0,1}},
    {"(2,1,1,1,5)", {-464,-301,-70,64}},
    {"(2,1,1,1,4,1)", {-32,-117,-30,64}},
    {"(2,1,1,1,3,2)", {188,231,40,32}},
    {"(2,1,1,1,3,1,1)", {-2,-5,0,4}},
    {"(2,1,1,1,2,3)", {296,95,38,32}},
    {"(2,1,1,1,2,2,1)", {-10,3,0,4}},
    {"(2,1,1,1,2,1,2)", {-50,-17,0,4}},
    {"(2,1,1,1,2,1,1,1)", {30,5,0,2}},
    {"(2,1,1,1,1,4)", {50,37,3,16}},
    {"(2,1,1,1,1,3,1)", {2,1,0,1}},
    {"(2,1,1,1,1,2,2)", {4,-1,0,1}},
    {"(2,1,1,1,1,2,1,1)", {-8,1,0,1}},
    {"(2,1,1,1,1,1,3)", {2,3,0,4}},
    {"(2,1,1,1,1,1,2,1)", {0,-7,0,2}},
    {"(2,1,1,1,1,1,1,2)", {0,2,0,1}},
    {"(2,1,1,1,1,1,1,1,1)", {0,0,0,1}},
    {"(1,9)", {0,0,0,1}},
    {"(1,8,1)", {2,0,0,1}},
    {"(1,7,2)", {-8,1,0,2}},
    {"(1,7,1,1)", {6,-1,0,4}},
    {"(1,6,3)", {6,1,1,1}},
    {"(1,6,2,1)", {-9,-2,-1,1}},
    {"(1,6,1,2)", {2,1,0,1}},
    {"(1,6,1,1,1)", {32,-15,-2,16}},
    {"(1,5,4)", {-34,-15,-6,2}},
    {"(1,5,3,1)", {30,15,8,4}},
    {"(1,5,2,2)", {42,7,4,4}},
    {"(1,5,2,1,1)", {68,183,28,32}},
    {"(1,5,1,3)", {34,15,4,4}},
    {"(1,5,1,2,1)", {-424,-193,-34,32}},
    {"(1,5,1,1,2)", {-200,-5,-34,64}},
    {"(1,5,1,1,1,1)", {176,-45,-6,64}},
    {"(1,4,5)", {14,7,3,1}},
    {"(1,4,4,1)", {-6,-2,-2,1}},
    {"(1,4,3,2)", {-10,-11,-4,2}},
    {"(1,4,3,1,1)", {-632,-377,-66,32}},
    {"(1,4,2,3)", {-4,4,0,1}},
    {"(1,4,2,2,1)", {318,42,15,16}},
    {"(1,4,2,1,2)", {80,-19,62,64}},
    {"(1,4,2,1,1,1)", {664,685,122,64}},
    {"(1,4,1,4)", {-9,-5,-1,1}},
    {"(1,4,1,3,1)", {440,167,38,32}},
    {"(1,4,1,2,2)", {-792,-153,-42,64}},
    {"(1,4,1,2,1,1)", {-832,-451,-66,64}},
    {"(1,4,1,1,3)", {210,70,21,16}},
    {"(1,4,1,1,2,1)", {-40,43,-2,16}},
    {"(1,4,1,1,1,2)", {-32,-117,-30,64}},
    {"(1,4,1,1,1,1,1)", {12,1,0,2}},
    {"(1,3,6)", {0,0,-1,1}},
    {"(1,3,5,1)", {30,15,8,4}},
    {"(1,3,4,2)", {-10,-4,0,1}},
    {"(1,3,4,1,1)", {1256,835,158,64}},
    {"(1,3,3,3)", {-42,-21,-4,2}},
    {"(1,3,3,2,1)", {1552,637,94,64}},
    {"(1,3,3,1,2)", {1592,653,98,64}},
    {"(1,3,3,1,1,1)", {-2144,-1043,-194,64}},
    {"(1,3,2,4)", {130,45,12,4}},
    {"(1,3,2,3,1)", {-1140,-429,-96,16}},
    {"(1,3,2,2,2)", {54,72,9,16}},
    {"(1,3,2,2,1,1)", {1576,151,-2,64}},
    {"(1,3,2,1,3)", {-1800,-783,-222,64}},
    {"(1,3,2,1,2,1)", {1380,579,156,32}},
    {"(1,3,2,1,1,2)", {-1160,-515,-62,64}},
    {"(1,3,2,1,1,1,1)", {-11,0,0,1}},
    {"(1,3,1,5)", {-34,-15,-4,4}},
    {"(1,3,1,4,1)", {440,167,38,32}},
    {"(1,3,1,3,2)", {-90,-36,-9,16}},
    {"(1,3,1,3,1,1)", {80,23,2,64}},
    {"(1,3,1,2,3)", {1800,783,222,64}},
    {"(1,3,1,2,2,1)", {-1320,-501,-114,32}},
    {"(1,3,1,2,1,2)", {672,285,6,64}},
    {"(1,3,1,2,1,1,1)", {-7,-4,0,1}},
    {"(1,3,1,1,4)", {-468,-169,-48,32}},
    {"(1,3,1,1,3,1)", {800,311,74,32}},
    {"(1,3,1,1,2,2)", {-160,-169,2,64}},
    {"(1,3,1,1,2,1,1)", {6,7,0,2}},
    {"(1,3,1,1,1,3)", {24,11,2,32}},
    {"(1,3,1,1,1,2,1)", {-3,-1,0,1}},
    {"(1,3,1,1,1,1,2)", {2,1,0,1}},
    {"(1,3,1,1,1,1,1,1)", {8,1,0,2}},
    {"(1,2,7)", {0,-1,0,1}},
    {"(1,2,6,1)", {-9,-2,-1,1}},
    {"(1,2,5,2)", {11,0,0,1}},
    {"(1,2,5,1,1)", {-352,-285,-86,64}},
    {"(1,2,4,3)", {8,10,1,1}},
    {"(1,2,4,2,1)", {-120,-69,18,16}},
    {"(1,2,4,1,2)", {-1440,-681,-126,64}},
    {"(1,2,4,1,1,1)", {888,589,90,64}},
    {"(1,2,3,4)", {62,17,8,4}},
    {"(1,2,3,3,1)", {1552,637,94,64}},
    {"(1,2,3,2,2)", {-752,-227,-86,32}},
    {"(1,2,3,2,1,1)", {300,99,60,32}},
    {"(1,2,3,1,3)", {280,121,34,64}},
    {"(1,2,3,1,2,1)", {-1008,-441,-198,64}},
    {"(1,2,3,1,1,2)", {1320,423,150,64}},
    {"(1,2,3,1,1,1,1)", {26,9,0,4}},
    {"(1,2,2,5)", {-34,-11,-3,1}},
    {"(1,2,2,4,1)", {318,42,15,16}},
    {"(1,2,2,3,2)", {1848,1059,270,64}},
    {"(1,2,2,3,1,1)", {-1800,-447,-78,64}},
    {"(1,2,2,2,3)", {-336,-447,-66,32}},
    {"(1,2,2,2,2,1)", {54,72,9,8}},
    {"(1,2,2,2,1,2)", {-306,-72,-27,16}},
    {"(1,2,2,2,1,1,1)", {15,-1,0,1}},
    {"(1,2,2,1,4)", {860,401,80,32}},
    {"(1,2,2,1,3,1)", {-1320,-501,-114,32}},
    {"(1,2,2,1,2,2)", {492,69,24,32}},
    {"(1,2,2,1,2,1,1)", {10,4,0,1}},
    {"(1,2,2,1,1,3)", {-200,5,-22,32}},
    {"(1,2,2,1,1,2,1)", {-6,-8,0,1}},
    {"(1,2,2,1,1,1,2)", {-10,3,0,4}},
    {"(1,2,2,1,1,1,1,1)", {-20,-1,0,2}},
    {"(1,2,1,6)", {8,3,1,1}},
    {"(1,2,1,5,1)", {-424,-193,-34,32}},
    {"(1,2,1,4,2)", {656,515,50,64}},
    {"(1,2,1,4,1,1)", {102,10,9,16}},
    {"(1,2,1,3,3)", {-804,-399,-48,32}},
    {"(1,2,1,3,2,1)", {-1008,-441,-198,64}},
    {"(1,2,1,3,1,2)", {270,108,27,16}},
    {"(1,2,1,3,1,1,1)", {-14,-7,0,4}},
    {"(1,2,1,2,4)", {-88,-13,-28,16}},
    {"(1,2,1,2,3,1)", {1380,579,156,32}},
    {"(1,2,1,2,2,2)", {-528,-429,-6,64}},
    {"(1,2,1,2,2,1,1)", {-4,4,0,1}},
    {"(1,2,1,2,1,3)", {-312,-141,30,64}},
    {"(1,2,1,2,1,2,1)", {0,0,0,1}},
    {"(1,2,1,2,1,1,2)", {22,13,0,2}},
    {"(1,2,1,2,1,1,1,1)", {-12,-9,0,2}},
    {"(1,2,1,1,5)", {62,19,13,16}},
    {"(1,2,1,1,4,1)", {-40,43,-2,16}},
    {"(1,2,1,1,3,2)", {-1592,-1101,-226,64}},
    {"(1,2,1,1,3,1,1)", {6,1,0,2}},
    {"(1,2,1,1,2,3)", {2576,1549,206,64}},
    {"(1,2,1,1,2,2,1)", {-6,-8,0,1}},
    {"(1,2,1,1,2,1,2)", {-10,-4,0,1}},
    {"(1,2,1,1,2,1,1,1)", {20,15,0,2}},
    {"(1,2,1,1,1,4)", {-952,-579,-78,64}},
    {"(1,2,1,1,1,3,1)", {-3,-1,0,1}},
    {"(1,2,1,1,1,2,2)", {5,6,0,1}},
    {"(1,2,1,1,1,2,1,1)", {-20,-15,0,2}},
    {"(1,2,1,1,1,1,3)", {-22,-11,0,4}},
    {"(1,2,1,1,1,1,2,1)", {12,9,0,1}},
    {"(1,2,1,1,1,1,1,2)", {0,-7,0,2}},
    {"(1,2,1,1,1,1,1,1,1)", {0,0,0,1}},
    {"(1,1,8)", {-1,0,0,1}},
    {"(1,1,7,1)", {6,-1,0,4}},
    {"(1,1,6,2)", {10,13,4,4}},
    {"(1,1,6,1,1)", {-48,13,6,32}},
    {"(1,1,5,3)", {-34,-27,-8,4}},
    {"(1,1,5,2,1)", {-352,-285,-86,64}},
    {"(1,1,5,1,2)", {344,139,34,32}},
    {"(1,1,5,1,1,1)", {-48,-1,2,32}},
    {"(1,1,4,4)", {-3,0,1,1}},
    {"(1,1,4,3,1)", {1256,835,158,64}},
    {"(1,1,4,2,2)", {28,29,-4,32}},
    {"(1,1,4,2,1,1)", {-1056,-729,-158,64}},
    {"(1,1,4,1,3)", {-656,-231,-58,64}},
    {"(1,1,4,1,2,1)", {102,10,9,16}},
    {"(1,1,4,1,1,2)", {12,9,2,8}},
    {"(1,1,4,1,1,1,1)", {-42,-7,0,4}},
    {"(1,1,3,5)", {46,19,0,4}},
    {"(1,1,3,4,1)", {-632,-377,-66,32}},
    {"(1,1,3,3,2)", {-2544,-1213,-206,64}},
    {"(1,1,3,3,1,1)", {1440,737,142,32}},
    {"(1,1,3,2,3)", {1596,673,144,32}},
    {"(1,1,3,2,2,1)", {-1800,-447,-78,64}},
    {"(1,1,3,2,1,2)", {-720,-351,-114,64}},
    {"(1,1,3,2,1,1,1)", {18,3,0,1}},
    {"(1,1,3,1,4)", {-704,-365,-70,64}},
    {"(1,1,3,1,3,1)", {80,23,2,64}},
    {"(1,1,3,1,2,2)", {1144,601,130,64}},
    {"(1,1,3,1,2,1,1)", {6,1,0,2}},
    {"(1,1,3,1,1,3)", {-944,-391,-90,64}},
    {"(1,1,3,1,1,2,1)", {6,1,0,2}},
    {"(1,1,3,1,1,1,2)", {-2,-5,0,4}},
    {"(1,1,3,1,1,1,1,1)", {-6,-1,0,1}},
    {"(1,1,2,6)", {2,-7,0,4}},
    {"(1,1,2,5,1)", {68,183,28,32}},
    {"(1,1,2,4,2)", {728,93,-30,64}},
    {"(1,1,2,4,1,1)", {-1056,-729,-158,64}},
    {"(1,1,2,3,3)", {144,119,20,16}},
    {"(1,1,2,3,2,1)", {300,99,60,32}},
    {"(1,1,2,3,1,2)", {-960,-321,-54,64}},
    {"(1,1,2,3,1,1,1)", {-54,-9,0,4}},
    {"(1,1,2,2,4)", {-2152,-667,-118,64}},
    {"(1,1,2,2,3,1)", {1576,151,-2,64}},
    {"(1,1,2,2,2,2)", {112,1,-2,32}},
    {"(1,1,2,2,2,1,1)", {-24,-4,0,1}},
    {"(1,1,2,2,1,3)", {1020,353,80,32}},
    {"(1,1,2,2,1,2,1)", {-4,4,0,1}},
    {"(1,1,2,2,1,1,2)", {0,0,0,1}},
    {"(1,1,2,2,1,1,1,1)", {24,4,0,1}},
    {"(1,1,2,1,5)", {752,293,46,64}},
    {"(1,1,2,1,4,1)", {-832,-451,-66,64}},
    {"(1,1,2,1,3,2)", {860,625,144,32}},
    {"(1,1,2,1,3,1,1)", {6,1,0,2}},
    {"(1,1,2,1,2,3)", {-1008,-521,-108,16}},
    {"(1,1,2,1,2,2,1)", {10,4,0,1}},
    {"(1,1,2,1,2,1,2)", {-2,-5,0,2}},
    {"(1,1,2,1,2,1,1,1)", {0,0,0,1}},
    {"(1,1,2,1,1,4)", {262,127,29,16}},
    {"(1,1,2,1,1,3,1)", {6,7,0,2}},
    {"(1,1,2,1,1,2,2)", {4,0,0,1}},
    {"(1,1,2,1,1,2,1,1)", {0,0,0,1}},
    {"(1,1,2,1,1,1,3)", {38,13,0,4}},
    {"(1,1,2,1,1,1,2,1)", {-20,-15,0,2}},
    {"(1,1,2,1,1,1,1,2)", {-8,1,0,1}},
    {"(1,1,2,1,1,1,1,1,1)", {0,0,0,1}},
    {"(1,1,1,7)", {-6,1,0,4}},
    {"(1,1,1,6,1)", {32,-15,-2,16}},
    {"(1,1,1,5,2)", {272,269,70,64}},
    {"(1,1,1,5,1,1)", {-48,-1,2,32}},
    {"(1,1,1,4,3)", {-314,-193,-35,16}},
    {"(1,1,1,4,2,1)", {888,589,90,64}},
    {"(1,1,1,4,1,2)", {72,47,6,32}},
    {"(1,1,1,4,1,1,1)", {12,2,0,1}},
    {"(1,1,1,3,4)", {1360,693,110,64}},
    {"(1,1,1,3,3,1)", {-2144,-1043,-194,64}},
    {"(1,1,1,3,2,2)", {316,49,16,32}},
    {"(1,1,1,3,2,1,1)", {-54,-9,0,4}},
    {"(1,1,1,3,1,3)", {-128,-45,-6,64}},
    {"(1,1,1,3,1,2,1)", {-14,-7,0,4}},
    {"(1,1,1,3,1,1,2)", {-1,1,0,1}},
    {"(1,1,1,3,1,1,1,1)", {6,1,0,2}},
    {"(1,1,1,2,5)", {-232,-305,-34,64}},
    {"(1,1,1,2,4,1)", {664,685,122,64}},
    {"(1,1,1,2,3,2)", {-184,-141,-44,16}},
    {"(1,1,1,2,3,1,1)", {18,3,0,1}},
    {"(1,1,1,2,2,3)", {152,613,138,64}},
    {"(1,1,1,2,2,2,1)", {15,-1,0,1}},
    {"(1,1,1,2,2,1,2)", {10,-3,0,4}},
    {"(1,1,1,2,2,1,1,1)", {-30,-5,0,1}},
    {"(1,1,1,2,1,4)", {208,53,-18,64}},
    {"(1,1,1,2,1,3,1)", {-7,-4,0,1}},
    {"(1,1,1,2,1,2,2)", {-30,-3,0,4}},
    {"(1,1,1,2,1,2,1,1)", {0,0,0,1}},
    {"(1,1,1,2,1,1,3)", {-12,-5,0,1}},
    {"(1,1,1,2,1,1,2,1)", {20,15,0,2}},
    {"(1,1,1,2,1,1,1,2)", {30,5,0,2}},
    {"(1,1,1,2,1,1,1,1,1)", {0,0,0,1}},
    {"(1,1,1,1,6)", {-80,47,2,64}},
    {"(1,1,1,1,5,1)", {176,-45,-6,64}},
    {"(1,1,1,1,4,2)", {-98,-45,-3,16}},
    {"(1,1,1,1,4,1,1)", {-42,-7,0,4}},
    {"(1,1,1,1,3,3)", {752,293,46,64}},
    {"(1,1,1,1,3,2,1)", {26,9,0,4}},
    {"(1,1,1,1,3,1,2)", {6,1,0,4}},
    {"(1,1,1,1,3,1,1,1)", {6,1,0,2}},
    {"(1,1,1,1,2,4)", {-232,-305,-34,64}},
    {"(1,1,1,1,2,3,1)", {-11,0,0,1}},
    {"(1,1,1,1,2,2,2)", {-4,1,0,1}},
    {"(1,1,1,1,2,2,1,1)", {24,4,0,1}},
    {"(1,1,1,1,2,1,3)", {46,19,0,4}},
    {"(1,1,1,1,2,1,2,1)", {-12,-9,0,2}},
    {"(1,1,1,1,2,1,1,2)", {-16,-5,0,1}},
    {"(1,1,1,1,2,1,1,1,1)", {0,0,0,1}},
    {"(1,1,1,1,1,5)", {-80,47,2,64}},
    {"(1,1,1,1,1,4,1)", {12,1,0,2}},
    {"(1,1,1,1,1,3,2)", {-2,-1,0,1}},
    {"(1,1,1,1,1,3,1,1)", {-6,-1,0,1}},
    {"(1,1,1,1,1,2,3)", {2,-7,0,4}},
    {"(1,1,1,1,1,2,2,1)", {-20,-1,0,2}},
    {"(1,1,1,1,1,2,1,2)", {10,4,0,1}},
    {"(1,1,1,1,1,2,1,1,1)", {0,0,0,1}},
    {"(1,1,1,1,1,1,4)", {-6,1,0,4}},
    {"(1,1,1,1,1,1,3,1)", {8,1,0,2}},
    {"(1,1,1,1,1,1,2,2)", {0,-1,0,1}},
    {"(1,1,1,1,1,1,2,1,1)", {0,0,0,1}},
    {"(1,1,1,1,1,1,1,3)", {-1,0,0,1}},
    {"(1,1,1,1,1,1,1,2,1)", {0,0,0,1}},
    {"(1,1,1,1,1,1,1,1,2)", {0,0,0,1}},
    {"(1,1,1,1,1,1,1,1,1,1)", {0,0,0,1}},
};

}  // namespace

RelationTable builtin_weight10_table() {
  RelationTable table;
  table.basis = {Index{8, 1, 1}, Index{7, 2, 1}, Index{6, 3, 1}};
  table.rows.reserve(std::size(kRows));
  for (const Row& row : kRows) {
    RelationRow r;
    r.target = parse_index(row.target);
    r.coefficients.assign(std::begin(row.coefficients), std::end(row.coefficients));
    table.rows.push_back(std::move(r));
  }
  return table;
}

}  // namespace fmzv
