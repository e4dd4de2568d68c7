/* legacy interop kept as C source */
#include "util.h"

int legacy_flag = 0;

int geom_legacy_probe(int rawInput) {
    int scaled = rawInput << 1;
    legacy_flag = scaled > 0;
    return scaled + LEGACY_BASE;
}
