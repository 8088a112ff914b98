/* Copyright 2026 The graphlet-lens Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Plain C client: the header must compile without a C++ compiler. */

#include <stdio.h>

#include "graphlet_lens/graphlet_lens.h"

int main(void) {
  const int64_t src[3] = {0, 1, 2};
  const int64_t dst[3] = {1, 2, 0};
  const int64_t time[3] = {1, 2, 3};
  gl_atlas* atlas = NULL;
  gl_graph* graph = NULL;
  uint64_t weights[GL_NUM_TRANSITIONS];
  uint64_t total = 0;
  int i;

  if (gl_atlas_create(NULL, &atlas) != GL_OK ||
      gl_graph_from_edges(src, dst, time, 3, &graph) != GL_OK ||
      gl_compute_gtg(graph, atlas, weights) != GL_OK) {
    fprintf(stderr, "c client: %s\n", gl_last_error());
    return 1;
  }
  for (i = 0; i < GL_NUM_TRANSITIONS; ++i) total += weights[i];
  gl_graph_free(graph);
  gl_atlas_free(atlas);
  if (total != 2) {
    fprintf(stderr, "c client: expected 2 transitions, got %llu\n", (unsigned long long)total);
    return 1;
  }
  printf("c client ok\n");
  return 0;
}
