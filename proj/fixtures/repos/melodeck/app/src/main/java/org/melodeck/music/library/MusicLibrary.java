package org.melodeck.music.library;

import android.content.ContentResolver;
import android.database.Cursor;
import android.net.Uri;
import android.provider.MediaStore;

import org.melodeck.music.model.Track;

import java.util.ArrayList;
import java.util.List;

public class MusicLibrary {
    private final ContentResolver contentResolver;

    public MusicLibrary(ContentResolver contentResolver) {
        this.contentResolver = contentResolver;
    }

    public List<Track> queryTracks() {
        List<Track> tracks = new ArrayList<>();
        Uri uri = MediaStore.Audio.Media.EXTERNAL_CONTENT_URI;
        Cursor cursor = contentResolver.query(uri, null, MediaStore.Audio.Media.IS_MUSIC + " != 0", null, null);
        if (cursor == null) return tracks;
        int idColumn = cursor.getColumnIndex(MediaStore.Audio.Media._ID);
        int titleColumn = cursor.getColumnIndex(MediaStore.Audio.Media.TITLE);
        int artistColumn = cursor.getColumnIndex(MediaStore.Audio.Media.ARTIST);
        int albumColumn = cursor.getColumnIndex(MediaStore.Audio.Media.ALBUM);
        int dataColumn = cursor.getColumnIndex(MediaStore.Audio.Media.DATA);
        int durationColumn = cursor.getColumnIndex(MediaStore.Audio.Media.DURATION);
        while (cursor.moveToNext()) {
            tracks.add(new Track(cursor.getLong(idColumn), cursor.getString(titleColumn),
                    cursor.getString(artistColumn), cursor.getString(albumColumn),
                    cursor.getString(dataColumn), cursor.getLong(durationColumn)));
        }
        cursor.close();
        return tracks;
    }

    public List<Track> tracksOfAlbum(String album) {
        List<Track> result = new ArrayList<>();
        for (Track track : queryTracks()) {
            if (track.getAlbum().equals(album)) result.add(track);
        }
        return result;
    }
}
