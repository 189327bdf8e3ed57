#include "fincat/context.hpp"

namespace fincat {

Context Context::build(const FiniteCategory& C) {
  Context ctx;
  ctx.C = &C;
  ctx.mono = mono_flags(C);
  ctx.epi = epi_flags(C);
  ctx.iso = iso_flags(C);
  ctx.extremal = extremal_flags(C, ctx.mono, ctx.epi, ctx.iso);
  ctx.obj_rep = iso_class_reps(C);
  ctx.sup.resize(C.object_count());
  ctx.sub.resize(C.object_count());
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < C.object_count(); ++x) {
    ctx.sup[x] = supobjects(C, x);
    ctx.sub[x] = subobjects(C, x);
  }
  return ctx;
}

}  // namespace fincat
