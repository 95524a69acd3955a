#include "registry.hpp"

#include "schlicht/errors.hpp"

namespace schlicht::cli {

std::vector<std::string> function_names() {
  return {"identity", "z-over-1-minus-z", "z-plus-z2-over-1-minus-z", "moebius-pole-p", "two-pole-rational", "koebe"};
}

FunctionHandle make_function(const std::string& name, const FunctionArgs& args) {
  if (name == "identity") return identity_function();
  if (name == "z-over-1-minus-z") return z_over_one_minus_z();
  if (name == "z-plus-z2-over-1-minus-z") return z_plus_z2_over_one_minus_z();
  if (name == "moebius-pole-p") return moebius_pole(args.p);
  if (name == "two-pole-rational") return two_pole_rational(args.p, args.mu);
  if (name == "koebe") return koebe_handle(UnitRotation(Complex(1.0, 0.0)));
  throw PreconditionError("unknown function '" + name + "'");
}

}  // namespace schlicht::cli
