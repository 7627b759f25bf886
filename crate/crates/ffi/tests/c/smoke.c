#include <stdio.h>
#include <string.h>
#include "fplab.h"

#define CHECK(call)                                                        \
  do {                                                                     \
    FplabStatus st_ = (call);                                              \
    if (st_ != FPLAB_STATUS_OK) {                                          \
      fprintf(stderr, "%s failed: %d %s\n", #call, st_, fplab_last_error()); \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  FplabRing *r = NULL;
  FplabIdeal *i = NULL;
  FplabPoly *f = NULL;
  uint64_t e = 0;
  uint32_t eta = 9;
  char *gb = NULL;

  CHECK(fplab_ring_new(2, "x,y,u,v", "grevlex", &r));
  CHECK(fplab_ideal_parse(r, "x*v*(y-u), y*u*(x-v), y*u*v*(y-u), x*u*v*(x-v)", &i));
  CHECK(fplab_multiplicity(i, &e));
  CHECK(fplab_ideal_groebner_basis(i, &gb));
  CHECK(fplab_poly_parse(r, "x*y", &f));
  CHECK(fplab_hsl_number(f, 4, &eta));
  printf("mult=%llu eta=%u gb=%s\n", (unsigned long long)e, eta, gb);
  fplab_string_free(gb);

  if (fplab_poly_parse(r, "x +* y", &f) != FPLAB_STATUS_SYNTAX) return 2;
  printf("error=%s\n", fplab_last_error());

  fplab_poly_free(f);
  fplab_ideal_free(i);
  fplab_ring_free(r);
  return e == 7 && eta == 0 ? 0 : 3;
}
