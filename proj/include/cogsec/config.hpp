#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cogsec {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario parameters in linear power units. dBm conversion happens at the
// CLI boundary only.
struct SystemConfig {
    int m_users = 0;                 // number of cognitive users (M)
    int n_eves = 0;                  // number of eavesdroppers (N)
    double interference_cap = 0.0;   // maximum tolerable interference at PR (I)
    double noise_cbs = 0.0;          // interference-plus-noise power at CBS (N_b)
    std::vector<double> noise_eve;   // per-eavesdropper noise power (N_{e_j})
    double sigma_m_sq = 0.0;         // reference main-link channel gain
    double lambda_me = 0.0;          // main-to-eavesdropper ratio (MER)
    std::vector<double> theta_main;  // per-user main-link gain factors
    std::vector<std::vector<double>> theta_eve;  // [user][eve] wiretap gain factors
    std::vector<double> sigma_ip_sq;             // CU-to-primary-receiver gains

    double sigma_e_sq() const { return sigma_m_sq / lambda_me; }
    double sigma_main_sq(int user) const { return theta_main[user] * sigma_m_sq; }
    double sigma_eve_sq(int user, int eve) const {
        return theta_eve[user][eve] * sigma_e_sq();
    }

    // Throws ConfigError naming the violated invariant.
    void validate() const;

    // Uniform scenario: every theta = 1 and every noise_eve = noise_eve_scalar.
    static SystemConfig symmetric(int m_users, int n_eves, double interference_cap,
                                  double noise_cbs, double noise_eve_scalar,
                                  double sigma_m_sq, double lambda_me,
                                  double sigma_ip_sq_scalar);

    // Copy of this config restricted to a single user.
    SystemConfig restricted_to_user(int user) const;
};

}  // namespace cogsec
