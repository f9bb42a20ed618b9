#include "cogsec/config.hpp"

#include <string>

namespace cogsec {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

void SystemConfig::validate() const {
    require(m_users >= 1, "m_users must be >= 1");
    require(n_eves >= 1, "n_eves must be >= 1");
    require(interference_cap > 0.0, "interference_cap must be positive");
    require(noise_cbs > 0.0, "noise_cbs must be positive");
    require(sigma_m_sq > 0.0, "sigma_m_sq must be positive");
    require(lambda_me > 0.0, "lambda_me must be positive");
    require(sigma_e_sq() > 0.0, "derived sigma_e_sq must be positive");

    require(static_cast<int>(noise_eve.size()) == n_eves,
            "noise_eve length must equal n_eves");
    for (double v : noise_eve) require(v > 0.0, "noise_eve entries must be positive");

    require(static_cast<int>(theta_main.size()) == m_users,
            "theta_main length must equal m_users");
    for (double v : theta_main) require(v > 0.0, "theta_main entries must be positive");

    require(static_cast<int>(sigma_ip_sq.size()) == m_users,
            "sigma_ip_sq length must equal m_users");
    for (double v : sigma_ip_sq)
        require(v > 0.0, "sigma_ip_sq entries must be positive");

    require(static_cast<int>(theta_eve.size()) == m_users,
            "theta_eve must have m_users rows");
    for (const auto& row : theta_eve) {
        require(static_cast<int>(row.size()) == n_eves,
                "theta_eve rows must have n_eves entries");
        for (double v : row) require(v > 0.0, "theta_eve entries must be positive");
    }
}

SystemConfig SystemConfig::symmetric(int m_users, int n_eves, double interference_cap,
                                     double noise_cbs, double noise_eve_scalar,
                                     double sigma_m_sq, double lambda_me,
                                     double sigma_ip_sq_scalar) {
    SystemConfig cfg;
    cfg.m_users = m_users;
    cfg.n_eves = n_eves;
    cfg.interference_cap = interference_cap;
    cfg.noise_cbs = noise_cbs;
    cfg.noise_eve.assign(static_cast<std::size_t>(n_eves), noise_eve_scalar);
    cfg.sigma_m_sq = sigma_m_sq;
    cfg.lambda_me = lambda_me;
    cfg.theta_main.assign(static_cast<std::size_t>(m_users), 1.0);
    cfg.theta_eve.assign(static_cast<std::size_t>(m_users),
                         std::vector<double>(static_cast<std::size_t>(n_eves), 1.0));
    cfg.sigma_ip_sq.assign(static_cast<std::size_t>(m_users), sigma_ip_sq_scalar);
    cfg.validate();
    return cfg;
}

SystemConfig SystemConfig::restricted_to_user(int user) const {
    SystemConfig cfg = *this;
    cfg.m_users = 1;
    cfg.theta_main = {theta_main.at(static_cast<std::size_t>(user))};
    cfg.theta_eve = {theta_eve.at(static_cast<std::size_t>(user))};
    cfg.sigma_ip_sq = {sigma_ip_sq.at(static_cast<std::size_t>(user))};
    cfg.validate();
    return cfg;
}

}  // namespace cogsec
