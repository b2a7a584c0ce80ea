#ifndef SAIQH_SAIQH_HPP
#define SAIQH_SAIQH_HPP

#include "saiqh/data_io.hpp"
#include "saiqh/errors.hpp"
#include "saiqh/model.hpp"
#include "saiqh/nsfd.hpp"
#include "saiqh/ode_reference.hpp"
#include "saiqh/stability.hpp"
#include "saiqh/trajectory.hpp"
#include "saiqh/types.hpp"

#endif  // SAIQH_SAIQH_HPP
