/*
 * Copyright (c) 2026 The qpc Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as C to check that the public header is usable from C. */
#include "qpc/qpc.h"

#include <math.h>
#include <stdio.h>

int main(void)
{
  qpc_stack *stack = NULL;
  double qw = 0.0, t = 0.0, r = 0.0;
  if (qpc_stack_create_reference(&stack) != QPC_OK)
    return 1;
  if (qpc_quarter_wave_omega(stack, &qw) != QPC_OK || qpc_transmissivity(stack, qw, &t, &r) != QPC_OK)
  {
    fprintf(stderr, "%s\n", qpc_last_error());
    qpc_stack_destroy(stack);
    return 1;
  }
  qpc_stack_destroy(stack);
  if (fabs(t + r - 1.0) > 1e-10 || t > 0.01)
  {
    fprintf(stderr, "unexpected T = %g, R = %g\n", t, r);
    return 1;
  }
  printf("T = %.6e at the quarter-wave point\n", t);
  return 0;
}
