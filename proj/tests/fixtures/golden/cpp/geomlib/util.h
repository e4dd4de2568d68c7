#ifndef GEOM_UTIL_H
#define GEOM_UTIL_H

#define LEGACY_BASE 7
#define CLAMP_HI 255

typedef unsigned char byte_t;

double clampValue(double rawValue, double hiBound);
int toggle_bit(int word_in, int bit_pos);
#endif
