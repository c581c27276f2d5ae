#include <stdio.h>
#include <string.h>

#include "boolean_kerov.h"

static int expect(const char *got, const char *want) {
  if (strcmp(got, want) != 0) {
    fprintf(stderr, "got %s, want %s\n", got, want);
    return 1;
  }
  return 0;
}

int main(void) {
  int failures = 0;
  BkPartition *pi = NULL;
  BkPolynomial *poly = NULL;
  char *s = NULL;

  if (bk_partition_parse("(3)", &pi) != BK_STATUS_OK) return 10;
  if (bk_boolean_kerov_polynomial(pi, &poly) != BK_STATUS_OK) return 11;
  if (bk_polynomial_to_string(poly, &s) != BK_STATUS_OK) return 12;
  failures += expect(s, "x4 + x2^2 + x2");
  bk_string_free(s);
  bk_polynomial_free(poly);
  bk_partition_free(pi);

  if (bk_partition_parse("(2,x)", &pi) != BK_STATUS_PARSE) return 13;
  if (bk_last_error_message() == NULL) return 14;

  if (bk_boolean_in_characters_json(4, &s) != BK_STATUS_OK) return 15;
  failures += expect(s, "[{\"pi\":[3],\"coeff\":\"1\"},{\"pi\":[1,1],\"coeff\":\"1\"}]");
  bk_string_free(s);

  printf("ok %s\n", bk_version());
  return failures;
}
