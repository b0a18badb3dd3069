#include <sstream>

#include "edss/sweep.hpp"

namespace edss {

namespace {

void list_formulas(std::ostringstream& os, Protocol protocol) {
  os << "formulas:\n";
  for (const auto& f : all_formulas()) {
    if (f.protocol != protocol) continue;
    os << "  " << f.name << " = " << f.expression << '\n';
  }
}

}  // namespace

std::string describe(Protocol protocol) {
  std::ostringstream os;
  os << "protocol " << to_string(protocol) << '\n';
  switch (protocol) {
    case Protocol::two_qubit:
      os << "register: a (Alice), b (Bob), c (ancilla), all qubits\n"
         << "steps:\n"
         << "  I   prepare the separable state rho0 on a, b, c\n"
         << "  II  Alice applies CNOT with control a and target c (rho1)\n"
         << "  III Alice sends c to Bob through the noisy channel (rho1')\n"
         << "  IV  Bob applies CNOT with control b and target c (rho2')\n"
         << "  V   prob: Bob measures c in the computational basis, outcomes 0 and 1 (0 succeeds)\n"
         << "      det: Bob applies the local channel on b, c and traces out c\n"
         << "partitions: a|bc, b|ac, c|ab at rho0, rho1, rho1', rho2'; a|b after step V\n";
      break;
    case Protocol::ghz:
      os << "register: a, b, c (three parties), d1, d2 (ancillas D), all qubits\n"
         << "steps:\n"
         << "  I   prepare the separable state sigma0 on a, b, c, d1, d2\n"
         << "  II  CNOT a->d1 and CNOT a->d2 (sigma1)\n"
         << "  III send d1 to b and d2 to c through the noisy channels (sigma1')\n"
         << "  IV  CNOT b->d1 and CNOT c->d2 (sigma2')\n"
         << "  V   measure d1 d2 in the computational basis\n"
         << "outcomes: 00 (success), 01, 10, 11\n"
         << "partitions: a|bcD, b|acD, c|abD, D|abc at sigma0, sigma1, sigma1', sigma2';"
            " a|bc, b|ac, c|ab and pairs a|b, b|c, a|c after step V\n";
      break;
    case Protocol::qudit:
      os << "register: a, b, c, all qudits of dimension d\n"
         << "steps:\n"
         << "  I   prepare the separable state omega0 on a, b, c\n"
         << "  II  generalized CNOT a->c (omega1)\n"
         << "  III send c through the noisy channel (omega1')\n"
         << "  IV  inverse generalized CNOT b->c (omega2')\n"
         << "  V   measure c in the computational basis\n"
         << "outcomes: d outcomes m = 0, 1, ..., d-1 (0 succeeds)\n"
         << "partitions: c|ab at omega0, omega1, omega1', omega2'; a|bc at omega1', omega2';"
            " b|ac at omega2'; a|b after step V\n";
      break;
  }
  list_formulas(os, protocol);
  return os.str();
}

}  // namespace edss
