//! Image file I/O: PNG (8-bit RGB/RGBA, via the `png` backend of the
//! `image` crate) and binary PPM "P6" with maxval 255.
//!
//! Loading sniffs the file magic; saving dispatches on the file extension.
//! Grayscale PNG input is expanded to RGB, and an alpha plane survives a
//! PNG round trip untouched. 16-bit content is rejected.

use std::fs;
use std::path::Path;

use image::{DynamicImage, ImageFormat};

use crate::error::{Error, Result};
use crate::raster::RasterImage;

const PNG_MAGIC: [u8; 8] = [0x89, b'P', b'N', b'G', b'\r', b'\n', 0x1a, b'\n'];

/// Load a PNG or binary PPM image.
pub fn load_image<P: AsRef<Path>>(path: P) -> Result<RasterImage> {
    let bytes = fs::read(path.as_ref())?;
    if bytes.starts_with(&PNG_MAGIC) {
        decode_png(&bytes)
    } else if bytes.starts_with(b"P6") {
        decode_ppm(&bytes)
    } else if bytes.starts_with(b"P") {
        Err(Error::UnsupportedFormat(
            "only binary P6 netpbm images are supported".into(),
        ))
    } else {
        Err(Error::UnsupportedFormat(
            "expected a PNG or binary PPM (P6) file".into(),
        ))
    }
}

/// Save as PNG (`.png`) or binary PPM (`.ppm`), chosen by extension.
/// PNG keeps the alpha plane when the image carries one; PPM has no alpha.
pub fn save_image<P: AsRef<Path>>(image: &RasterImage, path: P) -> Result<()> {
    let path = path.as_ref();
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .unwrap_or_default();
    match ext.as_str() {
        "png" => save_png(image, path),
        "ppm" => {
            fs::write(path, encode_ppm(image))?;
            Ok(())
        }
        other => Err(Error::UnsupportedFormat(format!(
            "cannot write '.{other}' files; use .png or .ppm"
        ))),
    }
}

fn decode_png(bytes: &[u8]) -> Result<RasterImage> {
    let decoded = image::load_from_memory_with_format(bytes, ImageFormat::Png)
        .map_err(map_image_error)?;
    let (w, h) = (decoded.width(), decoded.height());
    match decoded {
        DynamicImage::ImageRgb8(img) => RasterImage::from_rgb8(w, h, img.as_raw()),
        DynamicImage::ImageRgba8(img) => RasterImage::from_rgba8(w, h, img.as_raw()),
        DynamicImage::ImageLuma8(img) => {
            let rgb: Vec<u8> = img.as_raw().iter().flat_map(|&v| [v, v, v]).collect();
            RasterImage::from_rgb8(w, h, &rgb)
        }
        DynamicImage::ImageLumaA8(img) => {
            let mut rgba = Vec::with_capacity(w as usize * h as usize * 4);
            for px in img.as_raw().chunks_exact(2) {
                rgba.extend_from_slice(&[px[0], px[0], px[0], px[1]]);
            }
            RasterImage::from_rgba8(w, h, &rgba)
        }
        _ => Err(Error::UnsupportedFormat(
            "only 8-bit PNG images are supported".into(),
        )),
    }
}

fn save_png(image: &RasterImage, path: &Path) -> Result<()> {
    let (w, h) = (image.width(), image.height());
    let dynamic = match image.alpha() {
        Some(alpha) => {
            let rgb = image.to_rgb8();
            let mut rgba = Vec::with_capacity(rgb.len() / 3 * 4);
            for (px, &a) in rgb.chunks_exact(3).zip(alpha) {
                rgba.extend_from_slice(&[px[0], px[1], px[2], a]);
            }
            DynamicImage::ImageRgba8(
                image::RgbaImage::from_raw(w, h, rgba).expect("buffer sized from dimensions"),
            )
        }
        None => DynamicImage::ImageRgb8(
            image::RgbImage::from_raw(w, h, image.to_rgb8()).expect("buffer sized from dimensions"),
        ),
    };
    dynamic
        .save_with_format(path, ImageFormat::Png)
        .map_err(map_image_error)
}

fn map_image_error(err: image::ImageError) -> Error {
    match err {
        // Decoders report truncated streams as unexpected EOF.
        image::ImageError::IoError(e) if e.kind() == std::io::ErrorKind::UnexpectedEof => {
            Error::CorruptInput(e.to_string())
        }
        image::ImageError::IoError(e) => Error::Io(e),
        image::ImageError::Unsupported(e) => Error::UnsupportedFormat(e.to_string()),
        other => Error::CorruptInput(other.to_string()),
    }
}

fn encode_ppm(image: &RasterImage) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.extend(image.to_rgb8());
    out
}

fn decode_ppm(bytes: &[u8]) -> Result<RasterImage> {
    let mut cursor = 2; // past "P6"
    let width = read_header_int(bytes, &mut cursor)?;
    let height = read_header_int(bytes, &mut cursor)?;
    let maxval = read_header_int(bytes, &mut cursor)?;
    if maxval != 255 {
        return Err(Error::UnsupportedFormat(format!(
            "PPM maxval {maxval} (only 255 is supported)"
        )));
    }
    if width == 0 || height == 0 {
        return Err(Error::EmptyImage);
    }
    // Exactly one whitespace byte separates the header from the pixel data.
    match bytes.get(cursor) {
        Some(b) if b.is_ascii_whitespace() => cursor += 1,
        _ => return Err(Error::CorruptInput("PPM header not terminated".into())),
    }
    let expected = width as usize * height as usize * 3;
    let data = &bytes[cursor.min(bytes.len())..];
    if data.len() < expected {
        return Err(Error::CorruptInput(format!(
            "PPM pixel data truncated: expected {expected} bytes, found {}",
            data.len()
        )));
    }
    RasterImage::from_rgb8(width, height, &data[..expected])
}

/// Read one ASCII integer from a PPM header, skipping whitespace and
/// `#`-to-end-of-line comments.
fn read_header_int(bytes: &[u8], cursor: &mut usize) -> Result<u32> {
    loop {
        match bytes.get(*cursor) {
            Some(b) if b.is_ascii_whitespace() => *cursor += 1,
            Some(b'#') => {
                while let Some(b) = bytes.get(*cursor) {
                    *cursor += 1;
                    if *b == b'\n' {
                        break;
                    }
                }
            }
            _ => break,
        }
    }
    let start = *cursor;
    while bytes.get(*cursor).is_some_and(|b| b.is_ascii_digit()) {
        *cursor += 1;
    }
    if *cursor == start {
        return Err(Error::CorruptInput("malformed PPM header".into()));
    }
    std::str::from_utf8(&bytes[start..*cursor])
        .expect("digits are ascii")
        .parse::<u32>()
        .map_err(|_| Error::CorruptInput("PPM header value out of range".into()))
}
