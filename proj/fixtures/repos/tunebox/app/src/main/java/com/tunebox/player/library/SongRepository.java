package com.tunebox.player.library;

import android.content.ContentResolver;
import android.database.Cursor;
import android.provider.MediaStore;

import java.util.ArrayList;
import java.util.List;

/** Reads songs from the device media library. */
public class SongRepository {
    private final ContentResolver resolver;

    public SongRepository(ContentResolver resolver) {
        this.resolver = resolver;
    }

    public List<Song> loadSongs() {
        List<Song> songs = new ArrayList<>();
        String[] projection = {
            MediaStore.Audio.Media._ID, MediaStore.Audio.Media.TITLE, MediaStore.Audio.Media.ARTIST,
            MediaStore.Audio.Media.ALBUM, MediaStore.Audio.Media.DATA, MediaStore.Audio.Media.DURATION
        };
        Cursor cursor = resolver.query(MediaStore.Audio.Media.EXTERNAL_CONTENT_URI, projection,
                MediaStore.Audio.Media.IS_MUSIC + " != 0", null, MediaStore.Audio.Media.TITLE);
        if (cursor == null) return songs;
        while (cursor.moveToNext()) {
            songs.add(new Song(cursor.getLong(0), cursor.getString(1), cursor.getString(2),
                    cursor.getString(3), cursor.getString(4), cursor.getInt(5)));
        }
        cursor.close();
        return songs;
    }

    public List<Song> songsByArtist(String artist) {
        List<Song> result = new ArrayList<>();
        for (Song song : loadSongs()) {
            if (song.getArtist().equals(artist)) result.add(song);
        }
        return result;
    }
}
