#include <iostream>
#include <string>

#include "hilbloc/verify.hpp"

int main(int argc, char** argv) {
  using namespace hilbloc;
  const Profile profile = parse_profile(argc > 1 ? argv[1] : "standard");
  std::cout << "acceptance profile: " << to_string(profile) << "\n";
  int failures = 0;
  run_acceptance(profile, [&](const CheckResult& r) {
    std::cout << format_line(r) << std::endl;
    if (r.status == Status::Fail) ++failures;
  });
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
