#pragma once

#include <agq/field.hpp>
#include <agq/curve.hpp>
#include <agq/lincode.hpp>
#include <agq/distance.hpp>
#include <agq/agcode.hpp>
#include <agq/quantum.hpp>
#include <agq/io.hpp>
