#include "hg/mesh.hpp"

#include "hg/verify.hpp"

#include <cstdio>

namespace hg {

void write_mesh(std::ostream& out, const HarmonicSurface& s, int nx, int ny) {
  char buf[128];
  for (const auto& p : rational_grid(s.domain(), nx, ny)) {
    const Vec3<Rational> v = s.position(p);
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x.get_d(), v.y.get_d(), v.z.get_d());
    out << buf;
  }
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const int v00 = j * nx + i + 1;
      const int v10 = v00 + 1;
      const int v01 = v00 + nx;
      const int v11 = v01 + 1;
      out << "f " << v00 << ' ' << v10 << ' ' << v11 << '\n';
      out << "f " << v00 << ' ' << v11 << ' ' << v01 << '\n';
    }
  }
}

}  // namespace hg
