#pragma once

#include <pitr/codebook.hpp>
#include <pitr/codec.hpp>
#include <pitr/error.hpp>
#include <pitr/exact.hpp>
#include <pitr/metrics.hpp>
#include <pitr/pack.hpp>
#include <pitr/radix.hpp>
#include <pitr/verify.hpp>
