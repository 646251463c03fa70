//! Pixel-level containers: binary masks and float RGB images.
//!
//! Images are stored planar (channel-major) in `[0,1]`, which maps directly
//! onto the `C x H x W` tensor layout used by the networks. Masks store one
//! byte per pixel with values 0 or 1.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mask {
    pub w: usize,
    pub h: usize,
    data: Vec<u8>,
}

impl Mask {
    pub fn zeros(h: usize, w: usize) -> Self {
        Mask { w, h, data: vec![0; w * h] }
    }

    pub fn ones(h: usize, w: usize) -> Self {
        Mask { w, h, data: vec![1; w * h] }
    }

    pub fn from_fn(h: usize, w: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Mask::zeros(h, w);
        for y in 0..h {
            for x in 0..w {
                if f(x, y) {
                    m.data[y * w + x] = 1;
                }
            }
        }
        m
    }

    pub fn from_raw(h: usize, w: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != w * h {
            return Err(Error::contract(format!(
                "mask buffer length {} does not match {}x{}",
                data.len(),
                h,
                w
            )));
        }
        if data.iter().any(|&v| v > 1) {
            return Err(Error::contract("mask values must be 0 or 1"));
        }
        Ok(Mask { w, h, data })
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[y * self.w + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.data[y * self.w + x] = v as u8;
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn area(&self) -> usize {
        self.data.iter().map(|&v| v as usize).sum()
    }

    pub fn same_shape(&self, other: &Mask) -> bool {
        self.w == other.w && self.h == other.h
    }

    pub fn and(&self, other: &Mask) -> Mask {
        self.zip(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Mask) -> Mask {
        self.zip(other, |a, b| a | b)
    }

    /// Pixels of `self` outside `other`.
    pub fn and_not(&self, other: &Mask) -> Mask {
        self.zip(other, |a, b| a & (1 - b))
    }

    pub fn complement(&self) -> Mask {
        let data = self.data.iter().map(|&v| 1 - v).collect();
        Mask { w: self.w, h: self.h, data }
    }

    pub fn is_subset_of(&self, other: &Mask) -> bool {
        self.data.iter().zip(&other.data).all(|(&a, &b)| a <= b)
    }

    pub fn intersection_area(&self, other: &Mask) -> usize {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a & b) as usize)
            .sum()
    }

    /// Tight bounding box `(x0, y0, x1, y1)` inclusive, or None when empty.
    pub fn bbox(&self) -> Option<(usize, usize, usize, usize)> {
        let (mut x0, mut y0, mut x1, mut y1) = (usize::MAX, usize::MAX, 0, 0);
        let mut any = false;
        for y in 0..self.h {
            for x in 0..self.w {
                if self.get(x, y) == 1 {
                    any = true;
                    x0 = x0.min(x);
                    y0 = y0.min(y);
                    x1 = x1.max(x);
                    y1 = y1.max(y);
                }
            }
        }
        any.then_some((x0, y0, x1, y1))
    }

    pub fn flip_horizontal(&self) -> Mask {
        Mask::from_fn(self.h, self.w, |x, y| self.get(self.w - 1 - x, y) == 1)
    }

    /// Integer translation; pixels shifted outside the canvas are dropped,
    /// vacated pixels become 0.
    pub fn shift(&self, dx: i64, dy: i64) -> Mask {
        Mask::from_fn(self.h, self.w, |x, y| {
            let sx = x as i64 - dx;
            let sy = y as i64 - dy;
            sx >= 0
                && sy >= 0
                && (sx as usize) < self.w
                && (sy as usize) < self.h
                && self.get(sx as usize, sy as usize) == 1
        })
    }

    /// Centroid of the set pixels, or the canvas center when empty.
    pub fn centroid(&self) -> (f64, f64) {
        let mut sx = 0.0;
        let mut sy = 0.0;
        let mut n = 0.0;
        for y in 0..self.h {
            for x in 0..self.w {
                if self.get(x, y) == 1 {
                    sx += x as f64;
                    sy += y as f64;
                    n += 1.0;
                }
            }
        }
        if n == 0.0 {
            (self.w as f64 / 2.0, self.h as f64 / 2.0)
        } else {
            (sx / n, sy / n)
        }
    }
}

/// Planar float image, channel-major, values in `[0,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pub w: usize,
    pub h: usize,
    pub channels: usize,
    data: Vec<f32>,
}

impl Image {
    pub fn zeros(h: usize, w: usize, channels: usize) -> Self {
        Image { w, h, channels, data: vec![0.0; w * h * channels] }
    }

    pub fn filled(h: usize, w: usize, color: [f32; 3]) -> Self {
        let mut img = Image::zeros(h, w, 3);
        for c in 0..3 {
            img.data[c * w * h..(c + 1) * w * h].fill(color[c]);
        }
        img
    }

    pub fn from_raw(h: usize, w: usize, channels: usize, data: Vec<f32>) -> Result<Self> {
        if data.len() != w * h * channels {
            return Err(Error::contract(format!(
                "image buffer length {} does not match {}x{}x{}",
                data.len(),
                channels,
                h,
                w
            )));
        }
        Ok(Image { w, h, channels, data })
    }

    #[inline]
    pub fn get(&self, c: usize, x: usize, y: usize) -> f32 {
        self.data[(c * self.h + y) * self.w + x]
    }

    #[inline]
    pub fn set(&mut self, c: usize, x: usize, y: usize, v: f32) {
        self.data[(c * self.h + y) * self.w + x] = v;
    }

    pub fn set_pixel(&mut self, x: usize, y: usize, color: [f32; 3]) {
        for c in 0..3 {
            self.set(c, x, y, color[c]);
        }
    }

    pub fn pixel(&self, x: usize, y: usize) -> [f32; 3] {
        [self.get(0, x, y), self.get(1, x, y), self.get(2, x, y)]
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn same_shape(&self, other: &Image) -> bool {
        self.w == other.w && self.h == other.h && self.channels == other.channels
    }

    pub fn map(&self, f: impl Fn(f32) -> f32) -> Image {
        Image {
            w: self.w,
            h: self.h,
            channels: self.channels,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn flip_horizontal(&self) -> Image {
        let mut out = Image::zeros(self.h, self.w, self.channels);
        for c in 0..self.channels {
            for y in 0..self.h {
                for x in 0..self.w {
                    out.set(c, x, y, self.get(c, self.w - 1 - x, y));
                }
            }
        }
        out
    }

    /// Integer translation with a constant fill color for vacated pixels.
    pub fn shift(&self, dx: i64, dy: i64, fill: [f32; 3]) -> Image {
        let mut out = Image::zeros(self.h, self.w, self.channels);
        for c in 0..self.channels {
            for y in 0..self.h {
                for x in 0..self.w {
                    let sx = x as i64 - dx;
                    let sy = y as i64 - dy;
                    let v = if sx >= 0
                        && sy >= 0
                        && (sx as usize) < self.w
                        && (sy as usize) < self.h
                    {
                        self.get(c, sx as usize, sy as usize)
                    } else {
                        fill[c.min(2)]
                    };
                    out.set(c, x, y, v);
                }
            }
        }
        out
    }

    /// Maximum absolute per-channel difference at a pixel.
    pub fn pixel_diff(&self, other: &Image, x: usize, y: usize) -> f32 {
        (0..self.channels)
            .map(|c| (self.get(c, x, y) - other.get(c, x, y)).abs())
            .fold(0.0, f32::max)
    }
}

impl Mask {
    /// Loss-free PNG byte encoding: 0 -> 0, 1 -> 255.
    pub fn to_png_bytes(&self) -> Vec<u8> {
        self.data.iter().map(|&v| if v == 1 { 255 } else { 0 }).collect()
    }

    pub fn from_png_bytes(h: usize, w: usize, bytes: &[u8]) -> Result<Self> {
        let data = bytes.iter().map(|&v| (v >= 128) as u8).collect();
        Mask::from_raw(h, w, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_set_ops() {
        let a = Mask::from_fn(4, 4, |x, _| x < 2);
        let b = Mask::from_fn(4, 4, |_, y| y < 2);
        assert_eq!(a.and(&b).area(), 4);
        assert_eq!(a.or(&b).area(), 12);
        assert_eq!(a.and_not(&b).area(), 4);
        assert!(a.and(&b).is_subset_of(&a));
        assert_eq!(a.complement().area(), 8);
    }

    #[test]
    fn mask_bbox_and_shift() {
        let m = Mask::from_fn(8, 8, |x, y| x == 3 && y == 2);
        assert_eq!(m.bbox(), Some((3, 2, 3, 2)));
        let s = m.shift(2, 1);
        assert_eq!(s.bbox(), Some((5, 3, 5, 3)));
        let gone = m.shift(10, 0);
        assert_eq!(gone.area(), 0);
    }

    #[test]
    fn image_flip_is_involution() {
        let mut img = Image::zeros(4, 4, 3);
        img.set_pixel(1, 2, [0.3, 0.5, 0.7]);
        let back = img.flip_horizontal().flip_horizontal();
        assert_eq!(img, back);
    }
}
