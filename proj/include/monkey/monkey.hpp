#pragma once

#include "monkey/alphabet.hpp"
#include "monkey/analytics.hpp"
#include "monkey/io.hpp"
#include "monkey/paper_data.hpp"
#include "monkey/records.hpp"
#include "monkey/rng.hpp"
#include "monkey/scaled_decimal.hpp"
#include "monkey/simulator.hpp"
